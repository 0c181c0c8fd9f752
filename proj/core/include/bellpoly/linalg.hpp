#pragma once

#include "bellpoly/matrix.hpp"
#include "bellpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bellpoly {

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
///
/// Rows are stored sparsely with a leading 1 at their pivot column. Inserting
/// a vector reduces it against the existing pivots in ascending column order
/// and keeps it only if a nonzero entry survives, so `rank()` is always the
/// exact dimension of the span of everything inserted so far. Sparse 0/1 input
/// (generator vectors) stays cheap even at a few hundred columns.
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when `v` was independent of the current span (and was added).
  bool insert(std::span<const Rational> v);
  /// Sparse form: (column, value) pairs, any order, no duplicate columns.
  bool insert_sparse(std::span<const std::pair<std::size_t, Rational>> entries);
  /// True when `v` lies in the current span. Does not modify the basis.
  bool contains(std::span<const Rational> v) const;

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

  /// Reduces `w` in place; returns the first column left nonzero that has no
  /// pivot, or cols_ when `w` reduces to zero.
  std::size_t reduce(std::vector<Rational>& w) const;
  bool insert_dense(std::vector<Rational> w);

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;  // column -> row index or -1
};

std::size_t rank(const RationalMatrix& m);

struct RrefResult {
  RationalMatrix matrix;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;    // pivot column of each row
};

/// Reduced row echelon form by rational Gauss-Jordan elimination with the
/// lowest-index nonzero pivot in each column.
RrefResult rref(const RationalMatrix& m);

/// Dimension of the affine hull: rank of {p_i - p_0}. Throws on empty input or
/// ragged lengths.
std::size_t affine_dim(std::span<const RationalVector> points);

/// Same, but stops as soon as `upper_bound` is reached. Callers must have an
/// independent proof of the bound.
std::size_t affine_dim(std::span<const RationalVector> points, std::size_t upper_bound);

Rational determinant(RationalMatrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Unique representative of a linear functional modulo an affine equation
/// system E x = e. Functionals X.x <= c and (X + y E).x <= c + y.e agree on
/// the solution set; the representative has zero coefficient on every pivot
/// column of rref([E | e]), which depends only on the affine space itself.
class AffineReducer {
 public:
  AffineReducer() = default;
  /// Throws std::invalid_argument when the system is inconsistent.
  AffineReducer(const RationalMatrix& equations, std::span<const Rational> rhs);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.rows(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void reduce(RationalVector& coeffs, Rational& bound) const;

 private:
  std::size_t cols_ = 0;
  RationalMatrix rows_;   // rref rows over the coefficient columns
  RationalVector rhs_;    // matching right-hand sides
  std::vector<std::size_t> pivots_;
};

}  // namespace bellpoly
