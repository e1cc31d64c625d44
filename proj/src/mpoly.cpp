#include "focalkit/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "focalkit/errors.hpp"

namespace focalkit {

namespace {

bool same_universe(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int exps_total(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList make_vars(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (const char* n : names) v.emplace_back(n);
  return make_vars(std::move(v));
}

bool GradedLexLess::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
  const int da = exps_total(a), db = exps_total(b);
  if (da != db) return da < db;
  // Lex with the first variable most significant: a < b iff, at the first
  // index where they differ, a has the smaller exponent.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MPoly MPoly::constant(VarList vars, const Rat& value) {
  MPoly p(std::move(vars));
  if (!is_zero(value)) p.terms_.emplace(Exponents(p.nvars(), 0), value);
  return p;
}

MPoly MPoly::variable(VarList vars, std::size_t index) {
  MPoly p(std::move(vars));
  if (index >= p.nvars()) throw InputError("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exps_total(terms_.begin()->first) == 0);
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exps_total(terms_.rbegin()->first);
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return terms_.empty() ? -1 : d;
}

void MPoly::add_term(const Exponents& exps, const Rat& coeff) {
  assert(exps.size() == nvars());
  if (is_zero(coeff)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Rat MPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  assert(same_universe(vars_, o.vars_));
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  assert(same_universe(vars_, o.vars_));
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  assert(same_universe(vars_, o.vars_));
  MPoly r(vars_);
  Exponents e(nvars(), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(vars_);
  if (is_zero(c)) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly MPoly::operator/(const Rat& c) const {
  assert(!is_zero(c));
  MPoly r(vars_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v / c);
  return r;
}

MPoly MPoly::pow(int e) const {
  assert(e >= 0);
  MPoly r = MPoly::constant(vars_, Rat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  assert(same_universe(vars_, o.vars_));
  return terms_ == o.terms_;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

Rat MPoly::eval(std::span<const Rat> point) const {
  assert(point.size() == nvars());
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<std::optional<Rat>>& vals) const {
  assert(vals.size() == nvars());
  MPoly r(vars_);
  Exponents reduced(nvars(), 0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (vals[i]) {
        reduced[i] = 0;
        for (int j = 0; j < e[i]; ++j) t *= *vals[i];
      } else {
        reduced[i] = e[i];
      }
    }
    r.add_term(reduced, t);
  }
  return r;
}

MPoly MPoly::coefficient_of(std::size_t var, int e) const {
  MPoly r(vars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] != e) continue;
    Exponents d = exps;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

std::vector<MPoly> MPoly::univariate_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<MPoly> cs;
  for (int e = 0; e <= std::max(d, 0); ++e) cs.push_back(coefficient_of(var, e));
  if (d < 0) cs.assign(1, MPoly(vars_));
  return cs;
}

MPoly MPoly::from_univariate(std::size_t var, const std::vector<MPoly>& cs) {
  assert(!cs.empty());
  MPoly r(cs.front().vars());
  for (std::size_t e = 0; e < cs.size(); ++e) {
    MPoly t = cs[e];
    for (const auto& [exps, c] : t.terms_) {
      assert(exps[var] == 0);
      Exponents d = exps;
      d[var] = static_cast<int>(e);
      r.add_term(d, c);
    }
  }
  return r;
}

const MPoly::Exponents& MPoly::leading_exponents() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this / leading_coefficient();
}

MPoly MPoly::with_universe(const VarList& target) const {
  if (same_universe(vars_, target)) {
    MPoly r = *this;
    return r;
  }
  std::vector<int> where(nvars(), -1);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) {
      where[i] = static_cast<int>(it - target->begin());
    }
  }
  MPoly r(target);
  Exponents e(target->size(), 0);
  for (const auto& [exps, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (where[i] < 0)
        throw InputError("variable " + (*vars_)[i] +
                         " is not present in the target universe");
      e[static_cast<std::size_t>(where[i])] = exps[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  assert(same_universe(vars_, d.vars_));
  if (d.is_zero()) return std::nullopt;
  MPoly q(vars_);
  MPoly p = *this;
  const Exponents& de = d.leading_exponents();
  const Rat& dc = d.leading_coefficient();
  while (!p.is_zero()) {
    const Exponents& pe = p.leading_exponents();
    Exponents qe(pe.size());
    for (std::size_t i = 0; i < pe.size(); ++i) {
      if (pe[i] < de[i]) return std::nullopt;
      qe[i] = pe[i] - de[i];
    }
    MPoly t(vars_);
    t.terms_.emplace(std::move(qe), p.leading_coefficient() / dc);
    q = q + t;
    p = p - t * d;
  }
  return q;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  // Variables inside each monomial are rendered in alphabetical order.
  std::vector<std::size_t> order(nvars());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return (*vars_)[a] < (*vars_)[b];
  });
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sgn(c) < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i : order) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << mono;
    }
  }
  return out.str();
}

namespace {

// deg in `var` (-1 for zero) on a coefficient-vector view.
int udeg(const std::vector<MPoly>& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

std::vector<MPoly> utrim(std::vector<MPoly> f) {
  const int d = udeg(f);
  f.resize(static_cast<std::size_t>(d + 1 > 0 ? d + 1 : 1),
           MPoly(f.front().vars()));
  return f;
}

// Pseudo-remainder of f by g, both viewed in `var` with MPoly coefficients.
std::vector<MPoly> prem(std::vector<MPoly> f, const std::vector<MPoly>& g) {
  const int dg = udeg(g);
  assert(dg >= 0);
  const MPoly& lg = g[static_cast<std::size_t>(dg)];
  int df = udeg(f);
  while (df >= dg && df >= 0) {
    const MPoly lf = f[static_cast<std::size_t>(df)];
    // f <- lg*f - lf*x^(df-dg)*g
    for (auto& c : f) c = c * lg;
    for (int i = 0; i <= dg; ++i) {
      const std::size_t at = static_cast<std::size_t>(df - dg + i);
      f[at] = f[at] - lf * g[static_cast<std::size_t>(i)];
    }
    f = utrim(std::move(f));
    const int ndf = udeg(f);
    assert(ndf < df);
    df = ndf;
  }
  return f;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(a.vars(), Rat(1));

  // Recurse on the highest variable occurring in either operand.
  int var = -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = static_cast<int>(i);
      break;
    }
  }
  assert(var >= 0);
  const auto v = static_cast<std::size_t>(var);

  auto fa = a.univariate_in(v);
  auto fb = b.univariate_in(v);

  auto content = [](const std::vector<MPoly>& f) {
    MPoly c = f.front();
    for (std::size_t i = 1; i < f.size(); ++i) c = gcd(c, f[i]);
    return c;
  };
  auto divide_out = [](std::vector<MPoly> f, const MPoly& c) {
    for (auto& x : f) {
      if (x.is_zero()) continue;
      auto q = x.divide_exact(c);
      assert(q);
      x = *q;
    }
    return f;
  };

  const MPoly ca = content(fa);
  const MPoly cb = content(fb);
  const MPoly cg = gcd(ca, cb);
  fa = divide_out(std::move(fa), ca);
  fb = divide_out(std::move(fb), cb);

  // Primitive pseudo-remainder sequence in `var`.
  if (udeg(fa) < udeg(fb)) std::swap(fa, fb);
  while (udeg(fb) >= 0) {
    auto r = prem(fa, fb);
    fa = std::move(fb);
    if (udeg(r) >= 0) {
      const MPoly cr = content(r);
      r = divide_out(std::move(r), cr);
    }
    fb = std::move(r);
  }
  MPoly g = MPoly::from_univariate(v, fa);
  // Primitive part of the survivor times the content gcd.
  const MPoly cf = content(fa);
  auto q = g.divide_exact(cf);
  assert(q);
  return ((*q) * cg).monic();
}

MPoly gcd_polys(std::span<const MPoly> ps) {
  if (ps.empty()) throw InputError("gcd of an empty list");
  MPoly g = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (g.is_constant() && !g.is_zero()) break;
    g = gcd(g, ps[i]);
  }
  return g.is_zero() ? g : g.monic();
}

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

}  // namespace focalkit
