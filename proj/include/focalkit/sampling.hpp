#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "focalkit/rational.hpp"

namespace focalkit {

// Seeded random rationals with numerators in [-bound, bound] and denominators
// in [1, bound]. Draws go through hand-rolled rejection sampling on top of
// mt19937_64 so a seed produces the same stream on every platform
// (std::uniform_int_distribution is implementation-defined).
class Sampler {
 public:
  static constexpr long kDefaultBound = 10000;
  static constexpr int kRetries = 5;

  explicit Sampler(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

  long int_in(long lo, long hi);

  Rat rational(long bound = kDefaultBound);
  Rat nonzero_rational(long bound = kDefaultBound);

  std::vector<Rat> rational_vec(std::size_t len, long bound = kDefaultBound);

  // Independent stream for trial `index`; deterministic in (seed, index).
  Sampler substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace focalkit
