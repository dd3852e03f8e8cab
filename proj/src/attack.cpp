#include "textmark/attack.hpp"

#include <cmath>

#include "rng.hpp"
#include "textmark/errors.hpp"
#include "textmark/text.hpp"

namespace textmark {
namespace {

std::size_t scaled_count(double ratio, std::size_t n) {
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
}

void validate_ratio(double ratio, const char* name) {
  if (!std::isfinite(ratio) || ratio < 0.0) {
    raise(Errc::bad_input, std::string("attack ") + name + " ratio must be finite and >= 0");
  }
}

// Token arena: tokens are stored once, the working sequence holds indices so
// inserts and deletes move 4-byte values instead of strings.
struct Arena {
  std::vector<std::string> raw;
  std::vector<std::uint32_t> length;  // scalar length of the normalized form
  std::vector<bool> is_word;
  std::vector<bool> is_keyword;

  std::uint32_t add(std::string raw_form, const std::string& normalized,
                    std::string_view keyword) {
    raw.push_back(std::move(raw_form));
    length.push_back(static_cast<std::uint32_t>(scalar_length(normalized)));
    is_word.push_back(!normalized.empty());
    is_keyword.push_back(!keyword.empty() && normalized == keyword);
    return static_cast<std::uint32_t>(raw.size() - 1);
  }
};

}  // namespace

AttackResult attack(std::string_view text, const AttackSpec& spec,
                    std::optional<std::string_view> instrument_keyword) {
  validate_ratio(spec.insert_ratio, "insert");
  validate_ratio(spec.delete_ratio, "delete");
  validate_ratio(spec.reorder_ratio, "reorder");

  const std::string keyword =
      instrument_keyword ? std::string(*instrument_keyword) : std::string();
  const bool instrumenting = !keyword.empty();

  Arena arena;
  std::vector<std::uint32_t> seq;
  std::vector<std::uint32_t> original_words;  // arena ids, the default lexicon
  for (const Token& tok : tokenize(text)) {
    const std::uint32_t id = arena.add(tok.raw, tok.normalized, keyword);
    seq.push_back(id);
    if (arena.is_word[id]) original_words.push_back(id);
  }
  const std::size_t n = original_words.size();
  if (n == 0) raise(Errc::no_words, "attack target has no words");

  std::vector<std::uint32_t> lexicon;
  if (spec.lexicon) {
    if (spec.lexicon->empty()) raise(Errc::bad_input, "attack lexicon is empty");
    for (const std::string& word : *spec.lexicon) {
      const std::string norm = normalize(word);
      if (norm.empty() || tokenize(word).size() != 1) {
        raise(Errc::bad_input, "lexicon entry '" + word + "' is not a single word");
      }
      lexicon.push_back(arena.add(word, norm, keyword));
    }
  } else {
    lexicon = original_words;
  }

  const std::size_t k_insert = scaled_count(spec.insert_ratio, n);
  const std::size_t k_delete = scaled_count(spec.delete_ratio, n);
  const std::size_t k_reorder = static_cast<std::size_t>(
      std::llround(spec.reorder_ratio * static_cast<double>(n) / 2.0));

  Rng rng(spec.seed);
  AttackReport report;
  report.wc_before = n;
  report.inserted = k_insert;

  const auto is_kw_at = [&](std::size_t pos) {
    return pos < seq.size() && arena.is_keyword[seq[pos]];
  };

  // insertions, one gap at a time; gaps run over the full token sequence
  for (std::size_t i = 0; i < k_insert; ++i) {
    const std::size_t gap = rng.below(seq.size() + 1);
    const std::uint32_t word = lexicon[rng.below(lexicon.size())];
    if (instrumenting &&
        ((gap > 0 && is_kw_at(gap - 1)) || is_kw_at(gap) || arena.is_keyword[word])) {
      ++report.neighborhood_hits;
    }
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(gap), word);
  }

  // deletions: a uniformly random set of k_delete distinct word positions,
  // removed in one pass
  auto word_positions = [&] {
    std::vector<std::uint32_t> pos;
    for (std::uint32_t i = 0; i < seq.size(); ++i) {
      if (arena.is_word[seq[i]]) pos.push_back(i);
    }
    return pos;
  };
  {
    const std::vector<std::uint32_t> words = word_positions();
    if (k_delete > words.size()) {
      raise(Errc::delete_exceeds_text,
            "attack deletes " + std::to_string(k_delete) + " words but only " +
                std::to_string(words.size()) + " remain after insertions");
    }
    report.deleted = k_delete;
    // Floyd's sampling: k distinct values in [0, words.size())
    std::vector<bool> chosen(words.size(), false);
    for (std::size_t j = words.size() - k_delete; j < words.size(); ++j) {
      const std::uint64_t t = rng.below(j + 1);
      if (chosen[t]) {
        chosen[j] = true;
      } else {
        chosen[t] = true;
      }
    }
    std::vector<bool> drop(seq.size(), false);
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (!chosen[w]) continue;
      const std::uint32_t p = words[w];
      if (instrumenting &&
          (is_kw_at(p) || (p > 0 && is_kw_at(p - 1)) || is_kw_at(p + 1))) {
        ++report.neighborhood_hits;
      }
      drop[p] = true;
    }
    if (k_delete > 0) {
      std::vector<std::uint32_t> kept;
      kept.reserve(seq.size() - k_delete);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!drop[i]) kept.push_back(seq[i]);
      }
      seq = std::move(kept);
    }
  }

  // transpositions of word pairs; skipped once fewer than two words survive
  {
    const std::vector<std::uint32_t> words = word_positions();
    for (std::size_t i = 0; i < k_reorder && words.size() >= 2; ++i) {
      const std::size_t a = rng.below(words.size());
      std::size_t b = rng.below(words.size() - 1);
      if (b >= a) ++b;
      const std::uint32_t pa = words[a];
      const std::uint32_t pb = words[b];
      if (instrumenting && arena.raw[seq[pa]] != arena.raw[seq[pb]] &&
          (is_kw_at(pa) || (pa > 0 && is_kw_at(pa - 1)) || is_kw_at(pa + 1) || is_kw_at(pb) ||
           (pb > 0 && is_kw_at(pb - 1)) || is_kw_at(pb + 1))) {
        ++report.neighborhood_hits;
      }
      std::swap(seq[pa], seq[pb]);
      ++report.transpositions;
    }
  }

  AttackResult result;
  result.report = report;
  std::size_t words_after = 0;
  std::size_t bytes = 0;
  for (const std::uint32_t id : seq) {
    if (arena.is_word[id]) ++words_after;
    bytes += arena.raw[id].size() + 1;
  }
  result.report.wc_after = words_after;
  result.text.reserve(bytes);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) result.text.push_back(' ');
    result.text += arena.raw[seq[i]];
  }
  return result;
}

std::vector<AttackRun> attack_suite(std::string_view text,
                                    const std::vector<AttackSpec>& specs) {
  std::vector<AttackRun> runs;
  runs.reserve(specs.size());
  for (const AttackSpec& spec : specs) {
    AttackRun run;
    try {
      run.result = attack(text, spec);
    } catch (const Error& e) {
      run.error = e.what();
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace textmark
