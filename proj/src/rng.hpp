#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace textmark {

// mt19937_64 plus rejection sampling: bit-reproducible on every platform,
// unlike std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, n), n >= 1
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
    if (rem == n - 1) return gen_() % n;  // n divides 2^64, no bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace textmark
