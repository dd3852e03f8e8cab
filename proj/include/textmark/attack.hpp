#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textmark {

// Generator behind all attack randomness. Attacked text is reproducible for
// a given (text, spec) only across builds reporting the same identifier.
inline constexpr std::string_view kAttackRngAlgorithm = "mt19937_64-rej1";

struct AttackSpec {
  double insert_ratio = 0.0;   // fraction of the original word count, >= 0
  double delete_ratio = 0.0;   // in [0, 1]
  double reorder_ratio = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
  // Words drawn for insertions. Unset: sample uniformly from the document's
  // own word instances.
  std::optional<std::vector<std::string>> lexicon;
};

struct AttackReport {
  std::size_t inserted = 0;
  std::size_t deleted = 0;
  std::size_t transpositions = 0;
  std::size_t wc_before = 0;
  std::size_t wc_after = 0;
  // Edits that landed on or next to a keyword occurrence. Only counted when
  // an instrumentation keyword was supplied, otherwise 0.
  std::size_t neighborhood_hits = 0;
  std::string rng_algorithm{kAttackRngAlgorithm};
};

struct AttackResult {
  std::string text;  // surviving raw tokens joined by single spaces
  AttackReport report;
};

// Seeded word-level tampering. With n the original word count, performs
// k_i = round(insert_ratio * n) insertions at uniformly random token gaps,
// then k_d = round(delete_ratio * n) deletions of uniformly random distinct
// surviving words, then k_r = round(reorder_ratio * n / 2) transpositions of
// word pairs. The input text object is left untouched.
//
// Throws Errc::no_words when the text has no words, Errc::bad_input on
// non-finite or negative ratios or an unusable lexicon, and
// Errc::delete_exceeds_text when k_d exceeds the post-insertion word count.
AttackResult attack(std::string_view text, const AttackSpec& spec,
                    std::optional<std::string_view> instrument_keyword = std::nullopt);

struct AttackRun {
  std::string error;  // empty on success
  AttackResult result;
};

// Applies every spec to the same original text. Per-spec failures are
// captured in the run entry instead of aborting the batch.
std::vector<AttackRun> attack_suite(std::string_view text,
                                    const std::vector<AttackSpec>& specs);

}  // namespace textmark
