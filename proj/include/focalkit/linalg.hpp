#pragma once

#include <optional>
#include <vector>

#include "focalkit/rational.hpp"

namespace focalkit {

using RatVec = std::vector<Rat>;

// Dense matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVec apply(const RatVec& v) const;
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Pivot scan order for elimination; the two orders give independent
  // row-reduction paths for cross-checking ranks.
  enum class Pivoting { first_row, last_row };

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref(Pivoting p = Pivoting::first_row);

  std::size_t rank(Pivoting p = Pivoting::first_row) const;
  // Basis of the right kernel {v : A v = 0}; empty iff full column rank.
  std::vector<RatVec> kernel_basis() const;
  // One solution of A x = b (free variables 0), or nullopt if inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Linear subspace of Q^ambient, stored as the canonical RREF row basis;
// equality of subspaces is equality of representations.
class LinSubspace {
 public:
  LinSubspace() = default;
  explicit LinSubspace(std::size_t ambient) : ambient_(ambient) {}
  static LinSubspace span_of(std::size_t ambient,
                             const std::vector<RatVec>& vectors);
  static LinSubspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  int proj_dim() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<RatVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  bool contains(const LinSubspace& o) const;
  bool operator==(const LinSubspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Residual of v after eliminating the pivot coordinates; zero iff v
  // is in the subspace.
  RatVec reduce(RatVec v) const;

  LinSubspace intersect(const LinSubspace& o) const;
  LinSubspace sum(const LinSubspace& o) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace focalkit
