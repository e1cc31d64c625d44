#include "focalkit/sampling.hpp"

namespace focalkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = next_u64();
  while (v >= limit) v = next_u64();
  return v % n;
}

long Sampler::int_in(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rat Sampler::rational(long bound) {
  const long num = int_in(-bound, bound);
  const long den = int_in(1, bound);
  return rat(num, den);
}

Rat Sampler::nonzero_rational(long bound) {
  for (;;) {
    Rat r = rational(bound);
    if (!is_zero(r)) return r;
  }
}

std::vector<Rat> Sampler::rational_vec(std::size_t len, long bound) {
  std::vector<Rat> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(rational(bound));
  return v;
}

Sampler Sampler::substream(std::uint64_t index) const {
  return Sampler(splitmix64(seed_ ^ splitmix64(index + 1)));
}

}  // namespace focalkit
