#include "textmark/watermark.hpp"

#include <algorithm>
#include <span>

#include "textmark/errors.hpp"

namespace textmark {
namespace {

Watermark generate_impl(const std::vector<Token>& tokens, std::string_view keyword,
                        bool allow_empty) {
  Watermark wm;
  wm.keyword = std::string(keyword);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].normalized != keyword) continue;
    NeighborPair pair;
    if (i > 0) {
      pair.prev_len = static_cast<std::uint32_t>(scalar_length(tokens[i - 1].normalized));
    }
    if (i + 1 < tokens.size()) {
      pair.next_len = static_cast<std::uint32_t>(scalar_length(tokens[i + 1].normalized));
    }
    wm.pairs.push_back(pair);
  }
  wm.kw_count = wm.pairs.size();
  if (wm.pairs.empty() && !allow_empty) {
    raise(Errc::keyword_absent,
          "keyword '" + wm.keyword + "' does not occur in the text");
  }
  return wm;
}

std::size_t positional_matches(std::span<const std::uint32_t> a,
                               std::span<const std::uint32_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) ++matches;
  }
  return matches;
}

std::size_t positional_matches(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) ++matches;
  }
  return matches;
}

// Length of the longest common subsequence, rolling single-row DP.
std::size_t lcs_length(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) return 0;
  if (b.size() > a.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const std::uint32_t x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t saved = row[j + 1];
      if (x == b[j]) {
        row[j + 1] = diag + 1;
      } else {
        row[j + 1] = std::max(row[j + 1], row[j]);
      }
      diag = saved;
    }
  }
  return row.back();
}

}  // namespace

CompareMode compare_mode_from_name(std::string_view name) {
  if (name == "positional_symbol") return CompareMode::kPositionalSymbol;
  if (name == "positional_digit") return CompareMode::kPositionalDigit;
  if (name == "lcs_symbol") return CompareMode::kLcsSymbol;
  raise(Errc::bad_input, "unknown comparison mode '" + std::string(name) + "'");
}

std::string_view compare_mode_name(CompareMode mode) {
  switch (mode) {
    case CompareMode::kPositionalSymbol: return "positional_symbol";
    case CompareMode::kPositionalDigit: return "positional_digit";
    case CompareMode::kLcsSymbol: return "lcs_symbol";
  }
  return "positional_symbol";
}

Watermark generate(const std::vector<Token>& tokens, std::string_view keyword) {
  return generate_impl(tokens, keyword, /*allow_empty=*/false);
}

Watermark generate(std::string_view text, std::string_view keyword) {
  return generate(tokenize(text), keyword);
}

std::vector<std::uint32_t> symbols(const Watermark& wm) {
  std::vector<std::uint32_t> out;
  out.reserve(wm.pairs.size() * 2);
  for (const NeighborPair& p : wm.pairs) {
    out.push_back(p.prev_len);
    out.push_back(p.next_len);
  }
  return out;
}

std::string digit_string(const Watermark& wm) {
  std::string out;
  for (const NeighborPair& p : wm.pairs) {
    out += std::to_string(p.prev_len);
    out += std::to_string(p.next_len);
  }
  return out;
}

Comparison compare(const Watermark& original, const Watermark& extracted, CompareMode mode) {
  if (original.keyword != extracted.keyword) {
    raise(Errc::keyword_mismatch, "watermarks were generated for different keywords ('" +
                                      original.keyword + "' vs '" + extracted.keyword + "')");
  }
  if (original.pairs.empty()) {
    raise(Errc::empty_original, "original watermark has no pairs");
  }

  std::size_t matched = 0;
  std::size_t denominator = 0;
  bool equal = false;
  switch (mode) {
    case CompareMode::kPositionalSymbol: {
      const auto o = symbols(original);
      const auto e = symbols(extracted);
      matched = positional_matches(o, e);
      denominator = o.size();
      equal = o == e;
      break;
    }
    case CompareMode::kPositionalDigit: {
      const std::string o = digit_string(original);
      const std::string e = digit_string(extracted);
      matched = positional_matches(o, e);
      denominator = o.size();
      equal = o == e;
      break;
    }
    case CompareMode::kLcsSymbol: {
      const auto o = symbols(original);
      const auto e = symbols(extracted);
      matched = lcs_length(o, e);
      denominator = o.size();
      equal = o == e;
      break;
    }
  }

  Comparison cmp;
  cmp.mode = mode;
  cmp.equal = equal;
  cmp.war = static_cast<double>(matched) / static_cast<double>(denominator);
  cmp.wdr = 1.0 - cmp.war;
  return cmp;
}

VerificationResult extract_and_verify(const std::vector<Token>& tokens,
                                      const Watermark& original, CompareMode mode) {
  const Watermark extracted = generate_impl(tokens, original.keyword, /*allow_empty=*/true);
  VerificationResult result;
  result.comparison = compare(original, extracted, mode);
  result.tampered = !result.comparison.equal;
  result.kw_count_original = original.kw_count;
  result.kw_count_observed = extracted.kw_count;
  result.keyword = original.keyword;
  return result;
}

VerificationResult extract_and_verify(std::string_view text, const Watermark& original,
                                      CompareMode mode) {
  return extract_and_verify(tokenize(text), original, mode);
}

}  // namespace textmark
