#include "textmark/text.hpp"

#include <algorithm>

#include "textmark/errors.hpp"

namespace textmark {
namespace {

// Code points carrying the Unicode White_Space property.
bool is_space_cp(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Decodes the UTF-8 sequence starting at `pos`; stores its byte length in
// `len`. Malformed bytes decode as themselves, one byte at a time, so
// tokenization never fails on broken input.
char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  len = 1;
  if (b0 < 0x80) return b0;

  std::size_t need = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    return b0;  // stray continuation or invalid lead byte
  }
  if (pos + need >= s.size()) return b0;  // truncated sequence
  for (std::size_t i = 1; i <= need; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return b0;
    cp = (cp << 6) | (b & 0x3F);
  }
  len = need + 1;
  return cp;
}

bool is_ascii_alnum(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
         (cp >= '0' && cp <= '9');
}

// Letters and digits anchor a normalized word; everything non-ASCII is
// treated as letter-like rather than strippable punctuation.
bool is_word_cp(char32_t cp) {
  if (cp < 0x80) return is_ascii_alnum(cp);
  return !is_space_cp(cp);
}

}  // namespace

KeywordPolicy KeywordPolicy::auto_select(std::size_t min_count) {
  KeywordPolicy p;
  p.mode = Mode::kAuto;
  p.min_count = min_count;
  return p;
}

KeywordPolicy KeywordPolicy::explicit_word(std::string word, std::size_t min_count) {
  KeywordPolicy p;
  p.mode = Mode::kExplicit;
  p.word = std::move(word);
  p.min_count = min_count;
  return p;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 0;
    const char32_t cp = decode_utf8(text, i, len);
    if (is_space_cp(cp)) {
      i += len;
      continue;
    }
    const std::size_t start = i;
    i += len;
    while (i < text.size()) {
      std::size_t l2 = 0;
      const char32_t c2 = decode_utf8(text, i, l2);
      if (is_space_cp(c2)) break;
      i += l2;
    }
    Token tok;
    tok.raw = std::string(text.substr(start, i - start));
    tok.normalized = normalize(tok.raw);
    tok.index = tokens.size();
    tok.char_span = {start, i};
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::string normalize(std::string_view raw) {
  struct Cp {
    char32_t cp;
    std::size_t pos;
    std::size_t len;
  };
  std::vector<Cp> cps;
  cps.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t len = 0;
    const char32_t cp = decode_utf8(raw, i, len);
    cps.push_back({cp, i, len});
    i += len;
  }

  std::size_t first = cps.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_word_cp(cps[i].cp)) {
      if (first == cps.size()) first = i;
      last = i;
    }
  }
  if (first == cps.size()) return {};

  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = first; i <= last; ++i) {
    const Cp& c = cps[i];
    if (c.cp >= 'A' && c.cp <= 'Z') {
      out.push_back(static_cast<char>(c.cp - 'A' + 'a'));
    } else {
      out.append(raw.substr(c.pos, c.len));
    }
  }
  return out;
}

std::size_t scalar_length(std::string_view utf8) {
  std::size_t n = 0;
  for (const char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::size_t word_count(const std::vector<Token>& tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token& t) { return !t.normalized.empty(); }));
}

std::size_t word_count(std::string_view text) { return word_count(tokenize(text)); }

FrequencyTable frequency_table(const std::vector<Token>& tokens) {
  FrequencyTable table;
  for (const Token& t : tokens) {
    if (!t.normalized.empty()) ++table.entries[t.normalized];
  }
  return table;
}

FrequencyTable frequency_table(std::string_view text) {
  return frequency_table(tokenize(text));
}

KeywordChoice select_keyword(const std::vector<Token>& tokens, const KeywordPolicy& policy) {
  const FrequencyTable table = frequency_table(tokens);
  if (table.entries.empty()) raise(Errc::no_words, "text contains no words");

  KeywordChoice choice;
  if (policy.mode == KeywordPolicy::Mode::kExplicit) {
    const auto it = table.entries.find(policy.word);
    if (it == table.entries.end()) {
      raise(Errc::explicit_keyword_absent,
            "keyword '" + policy.word + "' does not occur in the text");
    }
    choice = {it->first, it->second};
  } else {
    // entries iterate in key order, so taking the first strict maximum gives
    // the lexicographically smallest word among the most frequent ones
    for (const auto& [word, count] : table.entries) {
      if (count > choice.count) choice = {word, count};
    }
  }
  if (choice.count < policy.min_count) {
    raise(Errc::below_min_count,
          "keyword '" + choice.keyword + "' occurs " + std::to_string(choice.count) +
              " time(s), fewer than the required " + std::to_string(policy.min_count));
  }
  return choice;
}

KeywordChoice select_keyword(std::string_view text, const KeywordPolicy& policy) {
  return select_keyword(tokenize(text), policy);
}

}  // namespace textmark
