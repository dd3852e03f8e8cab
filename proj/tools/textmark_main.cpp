// textmark: zero-watermark toolkit for plain text.
//
// Exit codes are a scripting contract:
//   0  success (verify: document authentic)
//   1  verify reported tampering
//   2  usage error
//   3  runtime error

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "textmark/attack.hpp"
#include "textmark/corpus.hpp"
#include "textmark/errors.hpp"
#include "textmark/evaluation.hpp"
#include "textmark/http_server.hpp"
#include "textmark/registry.hpp"
#include "textmark/serialization.hpp"
#include "textmark/text.hpp"
#include "textmark/watermark.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTampered = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

// "-" means stdin on every text-consuming command.
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

// Watermark argument: inline JSON, or @path to read it from a file.
textmark::Watermark parse_watermark_arg(const std::string& arg) {
  std::string payload = arg;
  if (!arg.empty() && arg.front() == '@') payload = read_input(arg.substr(1));
  try {
    return textmark::watermark_from_json(nlohmann::json::parse(payload));
  } catch (const nlohmann::json::exception& e) {
    textmark::raise(textmark::Errc::bad_input,
                    std::string("watermark is not valid JSON: ") + e.what());
  }
}

struct KeywordArgs {
  std::string input;
  std::size_t top = 10;
};

int cmd_keyword(const KeywordArgs& args) {
  const textmark::FrequencyTable table = textmark::frequency_table(read_input(args.input));
  std::vector<std::pair<std::string, std::size_t>> entries(table.entries.begin(),
                                                           table.entries.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t n = std::min(args.top, entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << entries[i].first << ' ' << entries[i].second << '\n';
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string input;
  std::string author;
  std::string registry;
  std::string keyword;    // empty: auto-select by frequency
  std::size_t min_count = 1;
};

int cmd_embed(const EmbedArgs& args) {
  const std::string text = read_input(args.input);
  textmark::KeywordPolicy policy = textmark::KeywordPolicy::auto_select(args.min_count);
  if (!args.keyword.empty()) {
    policy = textmark::KeywordPolicy::explicit_word(textmark::normalize(args.keyword),
                                                    args.min_count);
  }
  textmark::Registry registry(args.registry);
  const textmark::WatermarkRecord record =
      registry.register_document(text, args.author, policy);
  std::cout << textmark::to_json(record).dump() << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string registry;
  std::string record_id;
  std::string keyword;
  std::string watermark;
  std::string mode = "positional_symbol";
};

int cmd_verify(const VerifyArgs& args) {
  const textmark::CompareMode mode = textmark::compare_mode_from_name(args.mode);
  const std::string text = read_input(args.input);

  textmark::Watermark original;
  if (!args.record_id.empty()) {
    textmark::Registry registry(args.registry);
    const auto record = registry.find_by_id(args.record_id);
    if (!record) throw std::runtime_error("no record with id " + args.record_id);
    original = record->watermark;
  } else {
    original = parse_watermark_arg(args.watermark);
    if (textmark::normalize(args.keyword) != original.keyword) {
      textmark::raise(textmark::Errc::keyword_mismatch,
                      "--keyword does not match the supplied watermark");
    }
  }

  const textmark::VerificationResult verdict =
      textmark::extract_and_verify(text, original, mode);
  std::cout << textmark::verdict_json(verdict).dump() << '\n';
  return verdict.tampered ? kExitTampered : kExitOk;
}

struct AttackArgs {
  std::string input;
  std::string output;
  textmark::AttackSpec spec;
  std::string lexicon_file;
  std::string keyword;  // instrumentation only
};

int cmd_attack(AttackArgs& args) {
  const std::string text = read_input(args.input);
  if (!args.lexicon_file.empty()) {
    std::vector<std::string> words;
    for (const textmark::Token& tok : textmark::tokenize(read_input(args.lexicon_file))) {
      words.push_back(tok.raw);
    }
    args.spec.lexicon = std::move(words);
  }
  std::optional<std::string_view> instrument;
  std::string normalized_keyword;
  if (!args.keyword.empty()) {
    normalized_keyword = textmark::normalize(args.keyword);
    instrument = normalized_keyword;
  }
  const textmark::AttackResult result = textmark::attack(text, args.spec, instrument);
  write_output(args.output, result.text + "\n");
  std::cout << textmark::to_json(result.report).dump() << '\n';
  return kExitOk;
}

struct EvaluateArgs {
  std::string config;
  std::string out;
  std::string chart;
};

int cmd_evaluate(const EvaluateArgs& args) {
  const textmark::SuiteConfig config = textmark::load_suite_config(args.config);
  const std::vector<textmark::TrialRow> rows = textmark::run_suite(config);
  const std::string csv = textmark::emit_csv(rows);
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    write_output(args.out, csv);
  }
  if (!args.chart.empty()) write_output(args.chart, textmark::chart_series(rows));
  return kExitOk;
}

struct ServeArgs {
  std::string registry;
  std::string host = "127.0.0.1";
  int port = 8470;
  std::string mode = "positional_symbol";
};

int cmd_serve(const ServeArgs& args) {
  textmark::Registry registry(args.registry);
  if (!registry.truncation_warning().empty()) {
    std::cerr << "textmark: warning: " << registry.truncation_warning() << '\n';
  }
  textmark::CaServer server(registry, textmark::compare_mode_from_name(args.mode));
  std::cerr << "textmark: serving registry " << args.registry << " on http://" << args.host
            << ':' << args.port << '\n';
  if (!server.listen(args.host, args.port)) {
    throw std::runtime_error("cannot listen on " + args.host + ":" + std::to_string(args.port));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-watermark registration and tamper detection for plain text"};
  app.require_subcommand(1);

  KeywordArgs keyword_args;
  CLI::App* keyword = app.add_subcommand("keyword", "List the most frequent words");
  keyword->add_option("--input", keyword_args.input, "Text file, or - for stdin")->required();
  keyword->add_option("--top", keyword_args.top, "How many words to list");

  EmbedArgs embed_args;
  CLI::App* embed = app.add_subcommand("embed", "Generate a watermark and register it");
  embed->add_option("--input", embed_args.input, "Text file, or - for stdin")->required();
  embed->add_option("--author", embed_args.author, "Author to record")->required();
  embed->add_option("--registry", embed_args.registry, "Registry store path")->required();
  embed->add_option("--keyword", embed_args.keyword,
                    "Keyword to anchor the watermark (default: most frequent word)");
  embed->add_option("--min-count", embed_args.min_count,
                    "Reject keywords occurring fewer times than this");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check a document against a watermark");
  verify->add_option("--input", verify_args.input, "Text file, or - for stdin")->required();
  verify->add_option("--registry", verify_args.registry, "Registry store path");
  CLI::Option* rec_opt =
      verify->add_option("--record-id", verify_args.record_id, "Registered record to verify against");
  CLI::Option* kw_opt = verify->add_option("--keyword", verify_args.keyword,
                                           "Keyword of the supplied watermark");
  CLI::Option* wm_opt = verify->add_option(
      "--watermark", verify_args.watermark, "Watermark JSON (inline, or @file)");
  verify->add_option("--mode", verify_args.mode,
                     "positional_symbol | positional_digit | lcs_symbol");
  rec_opt->excludes(wm_opt);
  rec_opt->excludes(kw_opt);
  rec_opt->needs(verify->get_option("--registry"));
  wm_opt->needs(kw_opt);
  kw_opt->needs(wm_opt);

  AttackArgs attack_args;
  CLI::App* attack = app.add_subcommand("attack", "Apply a seeded tampering attack");
  attack->add_option("--input", attack_args.input, "Text file, or - for stdin")->required();
  attack->add_option("--output", attack_args.output, "Where to write the attacked text")
      ->required();
  attack->add_option("--insert", attack_args.spec.insert_ratio,
                     "Insertions as a fraction of the word count");
  attack->add_option("--delete", attack_args.spec.delete_ratio,
                     "Deletions as a fraction of the word count");
  attack->add_option("--reorder", attack_args.spec.reorder_ratio,
                     "Words touched by transpositions as a fraction of the word count");
  attack->add_option("--seed", attack_args.spec.seed, "Random seed");
  attack->add_option("--lexicon", attack_args.lexicon_file,
                     "Word list file for insertions (default: the document's own words)");
  attack->add_option("--keyword", attack_args.keyword,
                     "Count edits near occurrences of this keyword");

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Run an attack/verification suite");
  evaluate->add_option("--config", evaluate_args.config, "Suite config JSON")->required();
  evaluate->add_option("--out", evaluate_args.out, "Rows CSV path (default: stdout)");
  evaluate->add_option("--chart", evaluate_args.chart, "Per-keyword distortion series CSV path");

  ServeArgs serve_args;
  CLI::App* serve = app.add_subcommand("serve", "Serve the certifying authority over HTTP");
  serve->add_option("--registry", serve_args.registry, "Registry store path")->required();
  serve->add_option("--host", serve_args.host, "Bind address");
  serve->add_option("--port", serve_args.port, "Port");
  serve->add_option("--mode", serve_args.mode, "Default comparison mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keyword->parsed()) return cmd_keyword(keyword_args);
    if (embed->parsed()) return cmd_embed(embed_args);
    if (verify->parsed()) {
      if (verify_args.record_id.empty() && verify_args.watermark.empty()) {
        std::cerr << "textmark: verify needs --record-id or --keyword/--watermark\n";
        return kExitUsage;
      }
      return cmd_verify(verify_args);
    }
    if (attack->parsed()) return cmd_attack(attack_args);
    if (evaluate->parsed()) return cmd_evaluate(evaluate_args);
    if (serve->parsed()) return cmd_serve(serve_args);
  } catch (const std::exception& e) {
    std::cerr << "textmark: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
