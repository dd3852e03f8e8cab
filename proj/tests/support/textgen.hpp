// Random text fixtures for property tests: messy but well-formed prose with
// punctuation decorations, case noise and the occasional punctuation-only
// token.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testgen {

inline const std::vector<std::string>& base_words() {
  static const std::vector<std::string> words = {
      "a",   "ab",   "abc",  "is",  "the",  "and",  "of",    "in",
      "x",   "yz",   "test", "fun", "this", "word", "hello", "world",
      "don't", "re-do", "naïve", "q"};
  return words;
}

struct TextGen {
  explicit TextGen(std::uint64_t seed) : rng(seed) {}

  std::mt19937_64 rng;

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  std::string decorated_word() {
    static const std::vector<std::string> prefixes = {"", "", "", "\"", "("};
    static const std::vector<std::string> suffixes = {"", "", "", ".", ",", "!", ")"};
    std::string w = base_words()[below(base_words().size())];
    if (below(5) == 0 && !w.empty()) {
      w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    }
    return prefixes[below(prefixes.size())] + w + suffixes[below(suffixes.size())];
  }

  // `words` whitespace-delimited tokens; roughly one in twelve is
  // punctuation-only.
  std::string text(std::size_t words) {
    static const std::vector<std::string> separators = {" ", " ", " ", "  ", "\t", "\n"};
    std::string out;
    for (std::size_t i = 0; i < words; ++i) {
      if (i > 0) out += separators[below(separators.size())];
      if (below(12) == 0) {
        out += "--";
      } else {
        out += decorated_word();
      }
    }
    return out;
  }

  // Normalized form of a word that is guaranteed to occur in `text`; falls
  // back to "is" for texts without words.
  std::string keyword_from(const std::string& text);
};

inline std::string TextGen::keyword_from(const std::string& text) {
  std::vector<std::string> words;
  std::string cur;
  const auto flush = [&] {
    std::string norm;
    std::size_t b = 0;
    std::size_t e = cur.size();
    const auto is_word = [](unsigned char c) { return std::isalnum(c) || c >= 0x80; };
    while (b < e && !is_word(static_cast<unsigned char>(cur[b]))) ++b;
    while (e > b && !is_word(static_cast<unsigned char>(cur[e - 1]))) --e;
    for (std::size_t i = b; i < e; ++i) {
      norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(cur[i]))));
    }
    if (!norm.empty()) words.push_back(norm);
    cur.clear();
  };
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  if (words.empty()) return "is";
  return words[below(words.size())];
}

}  // namespace testgen
