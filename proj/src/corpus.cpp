#include "textmark/corpus.hpp"

#include <array>
#include <fstream>
#include <string_view>

#include <json.hpp>

#include "rng.hpp"
#include "textmark/errors.hpp"

namespace textmark {
namespace {

constexpr std::array<std::string_view, 30> kNouns = {
    "archive", "report",  "letter", "page",    "record",  "library",
    "reader",  "author",  "margin", "chapter", "index",   "copy",
    "note",    "draft",   "volume", "journal", "scribe",  "printer",
    "folio",   "preface", "edition", "catalog", "binder",  "shelf",
    "ledger",  "series",  "text",   "table",   "survey",  "office"};

constexpr std::array<std::string_view, 12> kAdjectives = {
    "old",   "plain",  "short",  "long",  "faded", "bound",
    "early", "quiet",  "narrow", "formal", "minor", "clear"};

constexpr std::array<std::string_view, 16> kVerbs = {
    "holds", "keeps",  "lists",  "marks", "shows",  "cites",  "stores", "binds",
    "reads", "checks", "maps",   "notes", "records", "orders", "tracks", "covers"};

class SentenceWriter {
 public:
  SentenceWriter(std::string& out, std::size_t budget, Rng& rng)
      : out_(out), budget_(budget), rng_(rng) {}

  std::size_t remaining() const { return budget_ - written_; }

  void word(std::string_view w) {
    if (sentence_words_ == 0) {
      if (written_ > 0) out_.push_back(' ');
      // sentence case
      out_.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(w[0]))));
      out_.append(w.substr(1));
    } else {
      out_.push_back(' ');
      out_.append(w);
    }
    ++sentence_words_;
    ++written_;
  }

  void comma() { out_.push_back(','); }

  void stop() {
    out_.push_back('.');
    sentence_words_ = 0;
  }

  std::string_view noun() { return kNouns[rng_.below(kNouns.size())]; }
  std::string_view adjective() { return kAdjectives[rng_.below(kAdjectives.size())]; }
  std::string_view verb() { return kVerbs[rng_.below(kVerbs.size())]; }
  bool chance(std::uint64_t one_in) { return rng_.below(one_in) == 0; }

 private:
  std::string& out_;
  std::size_t budget_;
  Rng& rng_;
  std::size_t written_ = 0;
  std::size_t sentence_words_ = 0;
};

// Every template carries two occurrences of its focus keyword, so a cycle of
// three sentences (~36 words) contributes two of each of "and", "of", "in".
void sentence_and(SentenceWriter& w) {
  w.word("the");
  w.word(w.adjective());
  w.word(w.noun());
  w.word("and");
  w.word("the");
  w.word(w.noun());
  if (w.chance(3)) w.comma();
  w.word(w.verb());
  w.word("the");
  w.word(w.noun());
  w.word("and");
  w.word("the");
  w.word(w.noun());
  w.stop();
}

void sentence_of(SentenceWriter& w) {
  w.word("the");
  w.word(w.noun());
  w.word("of");
  w.word("the");
  w.word(w.adjective());
  w.word(w.noun());
  w.word(w.verb());
  w.word("the");
  w.word(w.noun());
  w.word("of");
  w.word("the");
  w.word(w.noun());
  w.stop();
}

void sentence_in(SentenceWriter& w) {
  w.word("in");
  w.word("the");
  w.word(w.noun());
  if (w.chance(3)) w.comma();
  w.word("the");
  w.word(w.adjective());
  w.word(w.noun());
  w.word(w.verb());
  w.word("in");
  w.word("the");
  w.word(w.noun());
  w.stop();
}

// Longest template is 12 words; anything shorter gets a filler closer.
constexpr std::size_t kMaxSentenceWords = 12;

void sentence_closer(SentenceWriter& w, std::size_t words) {
  if (words >= 2) {
    w.word("the");
    for (std::size_t i = 0; i + 2 < words; ++i) w.word(w.noun());
    w.word(w.verb());
  } else {
    w.word("noted");
  }
  w.stop();
}

}  // namespace

std::vector<CorpusSample> default_corpus() {
  return {
      {"s01", 421, 101},  {"s02", 179, 102},   {"s03", 559, 103},   {"s04", 2018, 104},
      {"s05", 469, 105},  {"s06", 7993, 106},  {"s07", 1824, 107},  {"s08", 16076, 108},
      {"s09", 51800, 109}, {"s10", 67214, 110},
  };
}

std::string generate_sample_text(std::size_t words, std::uint64_t seed) {
  std::string out;
  out.reserve(words * 7);
  Rng rng(seed);
  SentenceWriter writer(out, words, rng);
  std::size_t turn = 0;
  while (writer.remaining() >= kMaxSentenceWords) {
    switch (turn++ % 3) {
      case 0: sentence_and(writer); break;
      case 1: sentence_of(writer); break;
      default: sentence_in(writer); break;
    }
  }
  if (writer.remaining() > 0) sentence_closer(writer, writer.remaining());
  return out;
}

std::string generate_sample_text(const CorpusSample& sample) {
  return generate_sample_text(sample.words, sample.seed);
}

std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir,
                                                const std::vector<CorpusSample>& samples) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const CorpusSample& sample : samples) {
    const std::filesystem::path path = dir / (sample.id + ".txt");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << generate_sample_text(sample) << '\n';
    if (!out) raise(Errc::storage_failure, "cannot write sample " + path.string());
    paths.push_back(path);
  }
  return paths;
}

std::vector<CorpusSample> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::bad_input, "cannot read manifest " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::bad_input, "manifest " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    raise(Errc::bad_input, "manifest " + path.string() + ": expected {\"samples\": [...]}");
  }
  std::vector<CorpusSample> samples;
  for (const nlohmann::json& s : j["samples"]) {
    if (!s.is_object() || !s.contains("id") || !s["id"].is_string() || !s.contains("words") ||
        !s["words"].is_number_unsigned() || !s.contains("seed") ||
        !s["seed"].is_number_unsigned()) {
      raise(Errc::bad_input,
            "manifest " + path.string() + ": each sample needs id, words and seed");
    }
    samples.push_back({s["id"].get<std::string>(), s["words"].get<std::size_t>(),
                       s["seed"].get<std::uint64_t>()});
  }
  return samples;
}

}  // namespace textmark
