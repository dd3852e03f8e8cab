#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace textmark {

// One whitespace-delimited token. `raw` is the exact source substring,
// `normalized` is the lowercased form with edge punctuation stripped.
// Punctuation-only tokens keep their position but normalize to "".
struct Token {
  std::string raw;
  std::string normalized;
  std::size_t index = 0;
  std::pair<std::size_t, std::size_t> char_span{0, 0};  // byte offsets, half-open

  friend bool operator==(const Token&, const Token&) = default;
};

struct FrequencyTable {
  // normalized word -> occurrence count; keys iterate in lexicographic order
  std::map<std::string, std::size_t> entries;
};

struct KeywordPolicy {
  enum class Mode { kAuto, kExplicit };

  Mode mode = Mode::kAuto;
  std::string word;  // explicit mode only, must already be normalized
  std::size_t min_count = 1;

  static KeywordPolicy auto_select(std::size_t min_count = 1);
  static KeywordPolicy explicit_word(std::string word, std::size_t min_count = 1);
};

struct KeywordChoice {
  std::string keyword;
  std::size_t count = 0;
};

// Splits on maximal runs of Unicode whitespace. Every non-whitespace byte
// lands in exactly one token's raw form; empty input yields no tokens.
std::vector<Token> tokenize(std::string_view text);

// Lowercases ASCII letters and strips leading/trailing characters that are
// neither letters nor digits. Interior punctuation (hyphens, apostrophes)
// survives. Code points >= U+0080 count as letters and pass through intact,
// so case folding is ASCII-only.
std::string normalize(std::string_view raw);

// Number of Unicode scalar values in a UTF-8 string. Word lengths everywhere
// in the toolkit are measured this way, over the normalized form.
std::size_t scalar_length(std::string_view utf8);

// Tokens with a non-empty normalized form.
std::size_t word_count(std::string_view text);
std::size_t word_count(const std::vector<Token>& tokens);

// Occurrence counts keyed by normalized word; punctuation-only tokens are
// not counted.
FrequencyTable frequency_table(std::string_view text);
FrequencyTable frequency_table(const std::vector<Token>& tokens);

// Auto mode picks the most frequent word, ties broken by lexicographically
// smallest so the choice is deterministic. Throws Errc::no_words,
// Errc::explicit_keyword_absent or Errc::below_min_count.
KeywordChoice select_keyword(std::string_view text, const KeywordPolicy& policy);
KeywordChoice select_keyword(const std::vector<Token>& tokens, const KeywordPolicy& policy);

}  // namespace textmark
