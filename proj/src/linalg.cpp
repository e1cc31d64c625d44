#include "focalkit/linalg.hpp"

#include <cassert>

#include "focalkit/errors.hpp"

namespace focalkit {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RatVec RatMatrix::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  assert(cols_ == o.rows_);
  RatMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (is_zero(at(i, k))) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  assert(v.size() == cols_);
  RatVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<std::size_t> RatMatrix::rref(Pivoting p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
    std::size_t pivot = rows_;
    if (p == Pivoting::first_row) {
      for (std::size_t i = r; i < rows_; ++i)
        if (!is_zero(at(i, j))) {
          pivot = i;
          break;
        }
    } else {
      for (std::size_t i = rows_; i-- > r;)
        if (!is_zero(at(i, j))) {
          pivot = i;
          break;
        }
    }
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(r, k), at(pivot, k));
    const Rat inv = at(r, j);
    for (std::size_t k = j; k < cols_; ++k) at(r, k) /= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || is_zero(at(i, j))) continue;
      const Rat f = at(i, j);
      for (std::size_t k = j; k < cols_; ++k) at(i, k) -= f * at(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

std::size_t RatMatrix::rank(Pivoting p) const {
  RatMatrix m = *this;
  return m.rref(p).size();
}

std::vector<RatVec> RatMatrix::kernel_basis() const {
  RatMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t j : pivots) is_pivot[j] = true;
  std::vector<RatVec> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    RatVec v(cols_, Rat(0));
    v[j] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
  assert(b.size() == rows_);
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RatVec x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

LinSubspace LinSubspace::span_of(std::size_t ambient,
                                 const std::vector<RatVec>& vectors) {
  LinSubspace s(ambient);
  if (vectors.empty()) return s;
  RatMatrix m = RatMatrix::from_rows(vectors);
  assert(m.cols() == ambient);
  const auto pivots = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
  s.pivots_ = pivots;
  return s;
}

LinSubspace LinSubspace::full(std::size_t ambient) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVec e(ambient, Rat(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span_of(ambient, rows);
}

RatVec LinSubspace::reduce(RatVec v) const {
  assert(v.size() == ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[r][j];
  }
  return v;
}

bool LinSubspace::contains(const RatVec& v) const {
  for (const Rat& x : reduce(v))
    if (!is_zero(x)) return false;
  return true;
}

bool LinSubspace::contains(const LinSubspace& o) const {
  for (const RatVec& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

LinSubspace LinSubspace::sum(const LinSubspace& o) const {
  assert(ambient_ == o.ambient_);
  std::vector<RatVec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span_of(ambient_, all);
}

LinSubspace LinSubspace::intersect(const LinSubspace& o) const {
  assert(ambient_ == o.ambient_);
  if (basis_.empty() || o.basis_.empty()) return LinSubspace(ambient_);
  // Solve a·U = b·W: kernel of [U^T | -W^T] gives the coefficient pairs.
  RatMatrix m(ambient_, dim() + o.dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < o.dim(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i)
      m.at(i, dim() + j) = -o.basis_[j][i];
  std::vector<RatVec> gens;
  for (const RatVec& ab : m.kernel_basis()) {
    RatVec w(ambient_, Rat(0));
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < ambient_; ++i) w[i] += ab[j] * basis_[j][i];
    gens.push_back(std::move(w));
  }
  return span_of(ambient_, gens);
}

}  // namespace focalkit
