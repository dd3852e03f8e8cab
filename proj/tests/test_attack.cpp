#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "support/textgen.hpp"
#include "textmark/attack.hpp"
#include "textmark/corpus.hpp"
#include "textmark/errors.hpp"
#include "textmark/text.hpp"

using namespace textmark;

namespace {

std::vector<std::string> raw_words(const std::string& text) {
  std::vector<std::string> out;
  for (const Token& tok : tokenize(text)) out.push_back(tok.raw);
  return out;
}

}  // namespace

TEST_CASE("null attack is the identity on the word sequence") {
  const std::string text = "The quick, brown fox jumps over the lazy dog.";
  const AttackResult r = attack(text, {.seed = 9});
  CHECK(raw_words(r.text) == raw_words(text));
  CHECK(r.report.inserted == 0);
  CHECK(r.report.deleted == 0);
  CHECK(r.report.transpositions == 0);
  CHECK(r.report.neighborhood_hits == 0);
  CHECK(r.report.wc_before == 9);
  CHECK(r.report.wc_after == 9);
  CHECK(r.report.rng_algorithm == kAttackRngAlgorithm);
}

TEST_CASE("insertion volume rounds against the original word count") {
  // 8 words, insert_ratio 0.25 -> 2 insertions
  const AttackResult r =
      attack("this is a test and this is fun", {.insert_ratio = 0.25, .seed = 7});
  CHECK(r.report.inserted == 2);
  CHECK(r.report.wc_after == 10);
  CHECK(word_count(r.text) == 10);
}

TEST_CASE("attacked word count follows the rounding arithmetic exactly") {
  // 421 words at +26%/-25% must land on 425
  const std::string text = generate_sample_text(421, 101);
  REQUIRE(word_count(text) == 421);
  const AttackResult r = attack(text, {.insert_ratio = 0.26, .delete_ratio = 0.25, .seed = 3});
  CHECK(r.report.inserted == 109);
  CHECK(r.report.deleted == 105);
  CHECK(r.report.wc_after == 425);
  CHECK(word_count(r.text) == 425);
}

TEST_CASE("attacks are deterministic in (text, spec) and vary with the seed") {
  const std::string text = generate_sample_text(150, 5);
  const AttackSpec spec{.insert_ratio = 0.2, .delete_ratio = 0.3, .reorder_ratio = 0.2,
                        .seed = 42};
  const AttackResult a = attack(text, spec);
  const AttackResult b = attack(text, spec);
  CHECK(a.text == b.text);

  AttackSpec other = spec;
  other.seed = 43;
  CHECK(attack(text, other).text != a.text);
}

TEST_CASE("word-count law holds for random ratio combinations") {
  testgen::TextGen gen(59);
  for (int i = 0; i < 60; ++i) {
    const std::string text = generate_sample_text(20 + gen.below(180), 1000 + i);
    const std::size_t n = word_count(text);
    AttackSpec spec;
    spec.insert_ratio = static_cast<double>(gen.below(50)) / 100.0;
    spec.delete_ratio = static_cast<double>(gen.below(101)) / 100.0;
    spec.reorder_ratio = static_cast<double>(gen.below(101)) / 100.0;
    spec.seed = gen.rng();
    const AttackResult r = attack(text, spec);
    const auto k_i = static_cast<std::size_t>(std::llround(spec.insert_ratio * double(n)));
    const auto k_d = static_cast<std::size_t>(std::llround(spec.delete_ratio * double(n)));
    CHECK(r.report.inserted == k_i);
    CHECK(r.report.deleted == k_d);
    CHECK(r.report.wc_before == n);
    CHECK(r.report.wc_after == n + k_i - k_d);
    CHECK(word_count(r.text) == r.report.wc_after);
  }
}

TEST_CASE("reorder-only attacks preserve the frequency table") {
  testgen::TextGen gen(61);
  for (int i = 0; i < 30; ++i) {
    const std::string text = generate_sample_text(30 + gen.below(100), 2000 + i);
    const AttackResult r = attack(text, {.reorder_ratio = 0.8, .seed = gen.rng()});
    CHECK(frequency_table(r.text).entries == frequency_table(text).entries);
    CHECK(r.report.wc_after == r.report.wc_before);
  }
}

TEST_CASE("deleting everything leaves only the insertions") {
  const AttackResult r = attack("a b c d", {.delete_ratio = 1.0, .seed = 1});
  CHECK(r.report.deleted == 4);
  CHECK(r.report.wc_after == 0);
  CHECK(r.text.empty());
}

TEST_CASE("delete volume beyond the text is an error") {
  try {
    (void)attack("a b c d", {.delete_ratio = 1.5, .seed = 1});
    FAIL("expected delete_exceeds_text");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::delete_exceeds_text);
  }
}

TEST_CASE("invalid specs and inputs are rejected") {
  CHECK_THROWS_AS((void)attack("a b", {.insert_ratio = -0.1}), Error);
  CHECK_THROWS_AS((void)attack("a b", {.insert_ratio = std::nan("")}), Error);
  try {
    (void)attack("-- --", {.insert_ratio = 0.5});
    FAIL("expected no_words");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_words);
  }
}

TEST_CASE("insertions draw from the provided lexicon") {
  AttackSpec spec{.insert_ratio = 0.5, .seed = 11};
  spec.lexicon = std::vector<std::string>{"zzz"};
  const AttackResult r = attack("this is a test and this is fun", spec);
  CHECK(r.report.inserted == 4);
  CHECK(frequency_table(r.text).entries.at("zzz") == 4);
}

TEST_CASE("unusable lexicon entries are rejected") {
  AttackSpec spec{.insert_ratio = 0.5};
  spec.lexicon = std::vector<std::string>{"two words"};
  CHECK_THROWS_AS((void)attack("a b c", spec), Error);
  spec.lexicon = std::vector<std::string>{"--"};
  CHECK_THROWS_AS((void)attack("a b c", spec), Error);
  spec.lexicon = std::vector<std::string>{};
  CHECK_THROWS_AS((void)attack("a b c", spec), Error);
}

TEST_CASE("neighborhood hits are only counted when instrumented") {
  const std::string text = "is a is b is c is d";
  CHECK(attack(text, {.insert_ratio = 1.0, .seed = 13}).report.neighborhood_hits == 0);
  const AttackResult r = attack(text, {.insert_ratio = 1.0, .seed = 13}, "is");
  // half the tokens are keyword occurrences: some of 8 insertions must land
  // next to one
  CHECK(r.report.neighborhood_hits > 0);
  CHECK(r.report.neighborhood_hits <= r.report.inserted);
}

TEST_CASE("deletions on keyword occurrences or their neighbors count as hits") {
  const AttackResult r = attack("is is is", {.delete_ratio = 1.0, .seed = 17}, "is");
  CHECK(r.report.neighborhood_hits == 3);
}

TEST_CASE("attack_suite applies specs independently and collects errors") {
  CHECK(attack_suite("a b c", {}).empty());

  const std::string text = generate_sample_text(60, 7);
  const AttackSpec spec{.insert_ratio = 0.25, .delete_ratio = 0.25, .seed = 5};
  AttackSpec bad = spec;
  bad.delete_ratio = 2.0;
  const auto runs = attack_suite(text, {spec, bad, spec});
  REQUIRE(runs.size() == 3);
  CHECK(runs[0].error.empty());
  CHECK_FALSE(runs[1].error.empty());
  CHECK(runs[2].error.empty());
  CHECK(runs[0].result.text == runs[2].result.text);  // same seed, same outcome
}
