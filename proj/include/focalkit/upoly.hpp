#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "focalkit/rational.hpp"

namespace focalkit {

// Dense univariate polynomial over Q; c[i] is the coefficient of u^i.
// Normal form keeps no trailing zero coefficients (zero = empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const { return c_.back(); }
  Rat coeff(int i) const;

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rat& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division (field coefficients): returns {quotient, remainder}.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0)=0

// Yun's algorithm: f = prod factors[i].first ^ factors[i].second with the
// factors squarefree and pairwise coprime. Input must be nonzero.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

struct RationalRoots {
  std::vector<Rat> roots;  // distinct roots of the (squarefree) input
  UPoly residual;          // cofactor with no rational roots found
  // False when integer factoring gave up, i.e. `residual` might still have
  // rational roots with huge numerator/denominator divisors.
  bool complete = true;
};

// Rational roots of a squarefree polynomial via the rational root theorem.
RationalRoots rational_roots_squarefree(const UPoly& f);

}  // namespace focalkit
