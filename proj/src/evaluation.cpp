#include "textmark/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "textmark/errors.hpp"
#include "textmark/serialization.hpp"
#include "textmark/text.hpp"

namespace textmark {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::bad_input, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

constexpr std::string_view kCsvHeader =
    "sample_id,keyword,wc_o,wc_a,tamper_detected,war,wdr,insert_ratio,delete_ratio,"
    "reorder_ratio,seed,neighborhood_hits,error";

void append_row(std::string& out, const TrialRow& row) {
  out += csv_field(row.sample_id);
  out.push_back(',');
  out += csv_field(row.keyword);
  out.push_back(',');
  out += std::to_string(row.wc_o);
  out.push_back(',');
  out += std::to_string(row.wc_a);
  out.push_back(',');
  out += row.tamper_detected ? "true" : "false";
  out.push_back(',');
  out += format_double(row.war);
  out.push_back(',');
  out += format_double(row.wdr);
  out.push_back(',');
  out += format_double(row.insert_ratio);
  out.push_back(',');
  out += format_double(row.delete_ratio);
  out.push_back(',');
  out += format_double(row.reorder_ratio);
  out.push_back(',');
  out += std::to_string(row.seed);
  out.push_back(',');
  out += std::to_string(row.neighborhood_hits);
  out.push_back(',');
  out += csv_field(row.error);
  out.push_back('\n');
}

}  // namespace

TrialRow run_trial(std::string_view text, std::string_view sample_id, std::string_view keyword,
                   const AttackSpec& spec, CompareMode mode) {
  TrialRow row;
  row.sample_id = std::string(sample_id);
  row.keyword = std::string(keyword);
  row.insert_ratio = spec.insert_ratio;
  row.delete_ratio = spec.delete_ratio;
  row.reorder_ratio = spec.reorder_ratio;
  row.seed = spec.seed;

  const Watermark original = generate(text, keyword);
  row.wc_o = original.kw_count;

  const AttackResult attacked = attack(text, spec, keyword);
  row.neighborhood_hits = attacked.report.neighborhood_hits;

  const VerificationResult verdict = extract_and_verify(attacked.text, original, mode);
  row.wc_a = verdict.kw_count_observed;
  row.tamper_detected = verdict.tampered;
  row.war = verdict.comparison.war;
  row.wdr = verdict.comparison.wdr;
  return row;
}

std::vector<TrialRow> run_suite(const SuiteConfig& config) {
  std::vector<TrialRow> rows;
  rows.reserve(config.samples.size() * config.keywords.size() * config.attacks.size());
  for (const SampleRef& sample : config.samples) {
    std::string text;
    std::string load_error;
    try {
      text = read_text_file(sample.path);
    } catch (const Error& e) {
      load_error = e.what();
    }
    for (const std::string& keyword : config.keywords) {
      for (const AttackSpec& spec : config.attacks) {
        if (!load_error.empty()) {
          TrialRow row;
          row.sample_id = sample.id;
          row.keyword = keyword;
          row.insert_ratio = spec.insert_ratio;
          row.delete_ratio = spec.delete_ratio;
          row.reorder_ratio = spec.reorder_ratio;
          row.seed = spec.seed;
          row.error = load_error;
          rows.push_back(std::move(row));
          continue;
        }
        try {
          rows.push_back(run_trial(text, sample.id, keyword, spec, config.mode));
        } catch (const Error& e) {
          TrialRow row;
          row.sample_id = sample.id;
          row.keyword = keyword;
          row.insert_ratio = spec.insert_ratio;
          row.delete_ratio = spec.delete_ratio;
          row.reorder_ratio = spec.reorder_ratio;
          row.seed = spec.seed;
          row.error = e.what();
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

SuiteConfig load_suite_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::bad_input, "cannot read config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::bad_input, "config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) raise(Errc::bad_input, "config must be a JSON object");

  SuiteConfig config;
  if (!j.contains("samples") || !j["samples"].is_array() || j["samples"].empty()) {
    raise(Errc::bad_input, "config needs a non-empty 'samples' array");
  }
  for (const nlohmann::json& s : j["samples"]) {
    if (!s.is_object() || !s.contains("id") || !s["id"].is_string() || !s.contains("path") ||
        !s["path"].is_string()) {
      raise(Errc::bad_input, "each sample needs string fields 'id' and 'path'");
    }
    config.samples.push_back({s["id"].get<std::string>(), s["path"].get<std::string>()});
  }
  if (!j.contains("keywords") || !j["keywords"].is_array() || j["keywords"].empty()) {
    raise(Errc::bad_input, "config needs a non-empty 'keywords' array");
  }
  for (const nlohmann::json& k : j["keywords"]) {
    if (!k.is_string()) raise(Errc::bad_input, "'keywords' must hold strings");
    config.keywords.push_back(k.get<std::string>());
  }
  if (!j.contains("attacks") || !j["attacks"].is_array() || j["attacks"].empty()) {
    raise(Errc::bad_input, "config needs a non-empty 'attacks' array");
  }
  for (const nlohmann::json& a : j["attacks"]) {
    config.attacks.push_back(attack_spec_from_json(a));
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) raise(Errc::bad_input, "'mode' must be a string");
    config.mode = compare_mode_from_name(j["mode"].get<std::string>());
  }
  return config;
}

std::string emit_csv(const std::vector<TrialRow>& rows) {
  std::string out{kCsvHeader};
  out.push_back('\n');
  for (const TrialRow& row : rows) append_row(out, row);
  return out;
}

std::string chart_series(const std::vector<TrialRow>& rows) {
  std::vector<std::string> keywords;
  for (const TrialRow& row : rows) {
    if (std::find(keywords.begin(), keywords.end(), row.keyword) == keywords.end()) {
      keywords.push_back(row.keyword);
    }
  }
  std::string out = "keyword,sample_id,wdr\n";
  for (const std::string& keyword : keywords) {
    std::vector<const TrialRow*> group;
    for (const TrialRow& row : rows) {
      if (row.keyword == keyword && row.error.empty()) group.push_back(&row);
    }
    std::stable_sort(group.begin(), group.end(), [](const TrialRow* a, const TrialRow* b) {
      return a->sample_id < b->sample_id;
    });
    for (const TrialRow* row : group) {
      out += csv_field(keyword);
      out.push_back(',');
      out += csv_field(row->sample_id);
      out.push_back(',');
      out += format_double(row->wdr);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace textmark
