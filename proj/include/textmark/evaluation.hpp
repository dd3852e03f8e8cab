#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "textmark/attack.hpp"
#include "textmark/watermark.hpp"

namespace textmark {

// One attack trial: keyword counts before/after, the tamper verdict and the
// accuracy/distortion rates, plus the attack parameters that produced it.
struct TrialRow {
  std::string sample_id;
  std::string keyword;
  std::size_t wc_o = 0;  // keyword occurrences in the original
  std::size_t wc_a = 0;  // keyword occurrences in the attacked text
  bool tamper_detected = false;
  double war = 0.0;
  double wdr = 1.0;
  double insert_ratio = 0.0;
  double delete_ratio = 0.0;
  double reorder_ratio = 0.0;
  std::uint64_t seed = 0;
  std::size_t neighborhood_hits = 0;
  std::string error;  // non-empty when the trial could not run
};

struct SampleRef {
  std::string id;
  std::string path;
};

struct SuiteConfig {
  std::vector<SampleRef> samples;
  std::vector<std::string> keywords;
  std::vector<AttackSpec> attacks;
  CompareMode mode = CompareMode::kPositionalSymbol;
};

// Watermarks the original, attacks it, re-extracts and fills a row. Throws
// (keyword absent, attack errors); run_suite converts throws into error rows.
TrialRow run_trial(std::string_view text, std::string_view sample_id, std::string_view keyword,
                   const AttackSpec& spec, CompareMode mode);

// Cross product samples x keywords x attacks, evaluated independently, rows
// in exactly that nesting order. A failing trial becomes an error row; the
// suite always completes.
std::vector<TrialRow> run_suite(const SuiteConfig& config);

// Config file shape:
//   {"samples": [{"id": str, "path": str}, ...],
//    "keywords": [str, ...],
//    "attacks":  [{"insert": num, "delete": num, "reorder": num, "seed": int}, ...],
//    "mode":     "positional_symbol" | "positional_digit" | "lcs_symbol"}
SuiteConfig load_suite_config(const std::filesystem::path& path);

// Header plus one line per row; identical rows always serialize to
// identical bytes. Error rows keep war = 0, wdr = 1.
std::string emit_csv(const std::vector<TrialRow>& rows);

// Per-keyword (sample_id, wdr) series for plotting, grouped by keyword in
// first-appearance order and sorted by sample_id within a group. Error rows
// are left out.
std::string chart_series(const std::vector<TrialRow>& rows);

}  // namespace textmark
