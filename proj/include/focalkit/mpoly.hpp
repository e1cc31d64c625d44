#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "focalkit/rational.hpp"

namespace focalkit {

// Shared, immutable variable universe. Every polynomial in a computation
// carries one; mixing universes is a usage error and asserts.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
VarList make_vars(std::initializer_list<const char*> names);

// Graded lexicographic order: total degree first, then lex with the first
// variable most significant. Leading term = largest key.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial over Q. Invariants: no zero coefficients stored,
// every exponent tuple has length = number of variables.
class MPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rat, GradedLexLess>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarList vars, const Rat& value);
  static MPoly variable(VarList vars, std::size_t index);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial
  int total_degree() const;    // -1 for the zero polynomial
  int degree_in(std::size_t var) const;

  void add_term(const Exponents& exps, const Rat& coeff);
  Rat coeff(const Exponents& exps) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  MPoly operator/(const Rat& c) const;
  MPoly pow(int e) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(std::size_t var) const;
  Rat eval(std::span<const Rat> point) const;
  // Substitute values for the variables where `vals[i]` is set; the result
  // stays over the same universe with those variables absent.
  MPoly substitute(const std::vector<std::optional<Rat>>& vals) const;

  // Coefficient of var^e, viewed as a univariate polynomial in `var`.
  MPoly coefficient_of(std::size_t var, int e) const;
  std::vector<MPoly> univariate_in(std::size_t var) const;
  static MPoly from_univariate(std::size_t var, const std::vector<MPoly>& cs);

  // Leading data under graded lex.
  const Exponents& leading_exponents() const;
  const Rat& leading_coefficient() const;
  MPoly monic() const;  // leading coefficient 1; zero stays zero

  // Re-express over a universe containing the same variables (by name);
  // throws InputError if a used variable is missing from `target`.
  MPoly with_universe(const VarList& target) const;

  // Exact division; nullopt if `d` does not divide exactly.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  std::string str() const;  // grammar-compatible, variables sorted by name

 private:
  VarList vars_;
  TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

// GCD over Q[vars], normalized to leading coefficient 1 under graded lex.
// gcd of an all-zero list is 0.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly gcd_polys(std::span<const MPoly> ps);

// a == c * b for some nonzero rational c.
bool proportional(const MPoly& a, const MPoly& b);

}  // namespace focalkit
