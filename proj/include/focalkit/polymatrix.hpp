#pragma once

#include <vector>

#include "focalkit/linalg.hpp"
#include "focalkit/mpoly.hpp"

namespace focalkit {

// Rectangular matrix of polynomials over a common variable universe.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const VarList& vars);
  static PolyMatrix from_rows(const std::vector<std::vector<MPoly>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarList& vars() const { return vars_; }
  MPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const MPoly& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx) const;
  PolyMatrix without_row(std::size_t i) const;

  MPoly det() const;  // square only; cofactor expansion
  // All minors of order `size` (choosing `size` rows and columns in index
  // order); used with size = min(rows, cols) for rank-drop loci.
  std::vector<MPoly> minors(std::size_t size) const;

  RatMatrix eval(std::span<const Rat> point) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  VarList vars_;
  std::vector<MPoly> e_;
};

// The rows = cols+1 signed minors: phi_i = (-1)^(i+1) det(m minus row i),
// so that det[v | m] = sum_i v_i phi_i by first-column cofactor expansion.
std::vector<MPoly> signed_maximal_minors(const PolyMatrix& m);

// Exact rank of a constant-entry evaluation of m at the full assignment.
// Throws InputError if the assignment misses a variable of m.
std::size_t rank_at(const PolyMatrix& m, const std::vector<Rat>& assignment);

// Right kernel of a degree-0 matrix, as a subspace of Q^cols.
LinSubspace kernel_basis(const PolyMatrix& m);

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k);

}  // namespace focalkit
