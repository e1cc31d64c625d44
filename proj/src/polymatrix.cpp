#include "focalkit/polymatrix.hpp"

#include <cassert>

#include "focalkit/errors.hpp"

namespace focalkit {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const VarList& vars)
    : rows_(rows), cols_(cols), vars_(vars), e_(rows * cols, MPoly(vars)) {}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<MPoly>>& rows) {
  assert(!rows.empty() && !rows.front().empty());
  PolyMatrix m(rows.size(), rows.front().size(), rows.front().front().vars());
  for (std::size_t i = 0; i < m.rows_; ++i) {
    assert(rows[i].size() == m.cols_);
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
  PolyMatrix m(row_idx.size(), col_idx.size(), vars_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      m.at(i, j) = at(row_idx[i], col_idx[j]);
  return m;
}

PolyMatrix PolyMatrix::without_row(std::size_t drop) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != drop) rows.push_back(i);
  std::vector<std::size_t> cols(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
  return submatrix(rows, cols);
}

MPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
  if (rows_ == 0) return MPoly::constant(vars_, Rat(1));
  if (rows_ == 1) return at(0, 0);
  MPoly acc(vars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, 0).is_zero()) continue;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != i) rows.push_back(r);
    std::vector<std::size_t> cols;
    for (std::size_t c = 1; c < cols_; ++c) cols.push_back(c);
    MPoly cof = at(i, 0) * submatrix(rows, cols).det();
    acc = (i % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) break;
      if (i == 0) return out;
    }
    if (idx[i] == i + n - k) return out;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<MPoly> PolyMatrix::minors(std::size_t size) const {
  std::vector<MPoly> out;
  for (const auto& ri : subsets_of_size(rows_, size))
    for (const auto& ci : subsets_of_size(cols_, size))
      out.push_back(submatrix(ri, ci).det());
  return out;
}

RatMatrix PolyMatrix::eval(std::span<const Rat> point) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(point);
  return m;
}

std::vector<MPoly> signed_maximal_minors(const PolyMatrix& m) {
  if (m.rows() != m.cols() + 1)
    throw ShapeError("signed maximal minors need rows = cols + 1");
  std::vector<MPoly> phis;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MPoly d = m.without_row(i).det();
    phis.push_back(i % 2 == 0 ? d : -d);
  }
  return phis;
}

std::size_t rank_at(const PolyMatrix& m, const std::vector<Rat>& assignment) {
  if (assignment.size() != (m.vars() ? m.vars()->size() : 0))
    throw InputError("assignment does not cover the matrix variables");
  return m.eval(assignment).rank();
}

LinSubspace kernel_basis(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_constant())
        throw InputError("kernel_basis needs degree-0 entries");
  RatMatrix cm(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      cm.at(i, j) = m.at(i, j).constant_value();
  return LinSubspace::span_of(m.cols(), cm.kernel_basis());
}

}  // namespace focalkit
