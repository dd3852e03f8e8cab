#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "textmark/text.hpp"

namespace textmark {

struct NeighborPair {
  std::uint32_t prev_len = 0;
  std::uint32_t next_len = 0;

  friend bool operator==(const NeighborPair&, const NeighborPair&) = default;
};

// Content-derived watermark: one (previous word length, next word length)
// pair per keyword occurrence, in text order. The text itself is never
// touched; the watermark lives entirely outside it.
struct Watermark {
  std::string keyword;               // normalized form
  std::vector<NeighborPair> pairs;   // one per occurrence
  std::size_t kw_count = 0;          // always pairs.size(); kept for the wire format

  friend bool operator==(const Watermark&, const Watermark&) = default;
};

// How two watermarks are lined up when scoring accuracy:
//   kPositionalSymbol  length symbols compared index by index (default)
//   kPositionalDigit   decimal renderings compared digit by digit
//   kLcsSymbol         longest common subsequence of length symbols
enum class CompareMode { kPositionalSymbol, kPositionalDigit, kLcsSymbol };

CompareMode compare_mode_from_name(std::string_view name);  // throws bad_input
std::string_view compare_mode_name(CompareMode mode);

struct Comparison {
  double war = 0.0;   // accuracy rate in [0, 1]
  double wdr = 1.0;   // distortion rate, always 1 - war
  bool equal = false;
  CompareMode mode = CompareMode::kPositionalSymbol;
};

struct VerificationResult {
  bool tampered = false;
  Comparison comparison;
  std::size_t kw_count_original = 0;
  std::size_t kw_count_observed = 0;
  std::string keyword;
};

// Scans for keyword occurrences (normalized equality) and records the
// neighbor word lengths, in scalar values, of the adjacent tokens. A missing
// neighbor at either end of the text contributes length 0. Throws
// Errc::keyword_absent when the keyword never occurs.
Watermark generate(std::string_view text, std::string_view keyword);
Watermark generate(const std::vector<Token>& tokens, std::string_view keyword);

// Flattened symbol sequence [p0, n0, p1, n1, ...]; always 2 * kw_count long.
std::vector<std::uint32_t> symbols(const Watermark& wm);

// Decimal rendering of the symbols with no separators. Lengths >= 10 make
// this rendering ambiguous, which is why comparisons default to symbol mode.
std::string digit_string(const Watermark& wm);

// Scores `extracted` against `original`. The denominator is always the
// original's symbol (or digit) count; positional modes count matches at
// identical positions up to the shorter sequence. `equal` is true only when
// the compared sequences are identical including length. Throws
// Errc::keyword_mismatch and Errc::empty_original.
Comparison compare(const Watermark& original, const Watermark& extracted, CompareMode mode);

// Regenerates the watermark from (possibly attacked) text and compares it to
// the registered original. A keyword that vanished entirely yields an empty
// extraction and a tampered verdict, not an error.
VerificationResult extract_and_verify(std::string_view text, const Watermark& original,
                                      CompareMode mode = CompareMode::kPositionalSymbol);
VerificationResult extract_and_verify(const std::vector<Token>& tokens, const Watermark& original,
                                      CompareMode mode = CompareMode::kPositionalSymbol);

}  // namespace textmark
