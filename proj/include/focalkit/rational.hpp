#pragma once

#include <gmpxx.h>

#include <string>

namespace focalkit {

// Exact rationals: always canonical (lowest terms, positive denominator).
// mpq_class keeps that invariant through arithmetic as long as every value
// entering the system is canonicalized once, which rat() below does.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// "p" or "p/q" with q > 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace focalkit
