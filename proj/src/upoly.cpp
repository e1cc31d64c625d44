#include "focalkit/upoly.hpp"

#include <algorithm>
#include <cassert>

namespace focalkit {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

void UPoly::trim() {
  while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> d = c_;
  const Rat lc = c_.back();
  for (auto& x : d) x /= lc;
  return UPoly(std::move(d));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
  return UPoly(std::move(d));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rat> d(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) d[i] -= o.c_[i];
  return UPoly(std::move(d));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> d(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(d));
}

UPoly UPoly::operator*(const Rat& s) const {
  std::vector<Rat> d = c_;
  for (auto& x : d) x *= s;
  return UPoly(std::move(d));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  assert(!d.is_zero());
  UPoly r = *this;
  const int dd = d.degree();
  std::vector<Rat> q(
      static_cast<std::size_t>(std::max(degree() - dd + 1, 0)), Rat(0));
  while (!r.is_zero() && r.degree() >= dd) {
    const int shift = r.degree() - dd;
    const Rat f = r.leading() / d.leading();
    q[static_cast<std::size_t>(shift)] = f;
    std::vector<Rat> rc = r.c_;
    for (int i = 0; i <= dd; ++i)
      rc[static_cast<std::size_t>(i + shift)] -=
          f * d.c_[static_cast<std::size_t>(i)];
    r = UPoly(std::move(rc));
  }
  return {UPoly(std::move(q)), r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  assert(!f.is_zero());
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() == 0) return out;
  UPoly a = f.monic();
  UPoly g = gcd(a, a.derivative());
  UPoly b = a.divmod(g).first;
  UPoly c = g;
  int mult = 1;
  while (b.degree() > 0) {
    UPoly d = gcd(b, c);
    UPoly factor = b.divmod(d).first;
    if (factor.degree() > 0) out.emplace_back(factor.monic(), mult);
    b = std::move(d);
    c = c.divmod(b).first;
    ++mult;
  }
  return out;
}

namespace {

// Divisors of |n| by trial division plus a primality test on the cofactor.
// Gives up (complete=false) on composite cofactors or huge divisor counts.
bool positive_divisors(const Int& n, std::vector<Int>& out) {
  assert(sgn(n) != 0);
  Int m = abs(n);
  std::vector<std::pair<Int, int>> factors;
  for (long p = 2; p <= 100000 && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.emplace_back(Int(p), e);
    }
  }
  if (m > 1) {
    if (Int(m) <= Int(100000) * 100000 ||
        mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      factors.emplace_back(m, 1);
    } else {
      return false;
    }
  }
  out.assign(1, Int(1));
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Int pe(1);
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
      if (out.size() > 4096) return false;
    }
  }
  return true;
}

}  // namespace

RationalRoots rational_roots_squarefree(const UPoly& f) {
  RationalRoots rr;
  UPoly g = f;
  if (g.is_zero() || g.degree() == 0) {
    rr.residual = g;
    return rr;
  }
  // Root at zero first.
  if (is_zero(g.coeff(0))) {
    rr.roots.emplace_back(0);
    std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = UPoly(std::move(shifted));
  }
  while (g.degree() >= 1) {
    if (g.degree() == 1) {
      rr.roots.push_back(-g.coeff(0) / g.coeff(1));
      g = UPoly::constant(Rat(1));
      break;
    }
    // Clear denominators to a Z-polynomial and apply the rational root
    // theorem: p/q with p | constant term, q | leading term.
    Int den_lcm(1);
    for (const Rat& c : g.coeffs())
      den_lcm = lcm(den_lcm, Int(c.get_den()));
    std::vector<Int> zc;
    for (const Rat& c : g.coeffs())
      zc.push_back(Int(c.get_num()) * (den_lcm / Int(c.get_den())));
    std::vector<Int> ps, qs;
    if (!positive_divisors(zc.front(), ps) ||
        !positive_divisors(zc.back(), qs)) {
      rr.complete = false;
      break;
    }
    std::optional<Rat> found;
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        for (int s : {1, -1}) {
          Rat cand = rat(s > 0 ? p : Int(-p), q);
          if (is_zero(g.eval(cand))) {
            found = cand;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    rr.roots.push_back(*found);
    std::vector<Rat> lin{-*found, Rat(1)};
    auto [quot, rem] = g.divmod(UPoly(std::move(lin)));
    assert(rem.is_zero());
    g = std::move(quot);
  }
  rr.residual = g.monic();
  return rr;
}

}  // namespace focalkit
