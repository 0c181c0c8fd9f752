#include "bellpoly/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellpoly {

RowBasis::RowBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

std::size_t RowBasis::reduce(std::vector<Rational>& w) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(w[c]) == 0) continue;
    const int r = pivot_row_[c];
    if (r < 0) return c;
    const Rational factor = w[c];
    for (const auto& [col, value] : rows_[static_cast<std::size_t>(r)]) w[col] -= factor * value;
  }
  return cols_;
}

bool RowBasis::insert_dense(std::vector<Rational> w) {
  const std::size_t lead = reduce(w);
  if (lead == cols_) return false;
  const Rational inv = 1 / w[lead];
  SparseRow row;
  for (std::size_t c = lead; c < cols_; ++c) {
    if (sgn(w[c]) != 0) row.emplace_back(c, w[c] * inv);
  }
  pivot_row_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowBasis::insert(std::span<const Rational> v) {
  if (v.size() != cols_) throw std::invalid_argument("RowBasis::insert: width mismatch");
  return insert_dense(std::vector<Rational>(v.begin(), v.end()));
}

bool RowBasis::insert_sparse(std::span<const std::pair<std::size_t, Rational>> entries) {
  std::vector<Rational> w(cols_);
  for (const auto& [col, value] : entries) {
    if (col >= cols_) throw std::invalid_argument("RowBasis::insert_sparse: column out of range");
    w[col] = value;
  }
  return insert_dense(std::move(w));
}

bool RowBasis::contains(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowBasis::contains: width mismatch");
  std::vector<Rational> w(v.begin(), v.end());
  return reduce(w) == cols_;
}

std::size_t rank(const RationalMatrix& m) {
  RowBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    basis.insert(m.row(r));
    if (basis.rank() == m.cols()) break;
  }
  return basis.rank();
}

RrefResult rref(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(lead_row, p);
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= factor * m(lead_row, j);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  RationalMatrix reduced(0, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) reduced.append_row(m.row(r));
  return {std::move(reduced), std::move(pivots)};
}

namespace {

void check_points(std::span<const RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("affine_dim: empty point set");
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw std::invalid_argument("affine_dim: ragged points");
  }
}

}  // namespace

std::size_t affine_dim(std::span<const RationalVector> points, std::size_t upper_bound) {
  check_points(points);
  const auto& base = points.front();
  RowBasis basis(base.size());
  std::vector<std::pair<std::size_t, Rational>> diff;
  for (std::size_t i = 1; i < points.size() && basis.rank() < upper_bound; ++i) {
    diff.clear();
    for (std::size_t c = 0; c < base.size(); ++c) {
      if (points[i][c] != base[c]) diff.emplace_back(c, points[i][c] - base[c]);
    }
    if (!diff.empty()) basis.insert_sparse(diff);
  }
  return basis.rank();
}

std::size_t affine_dim(std::span<const RationalVector> points) {
  check_points(points);
  return affine_dim(points, points.front().size());
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto reduced = rref(aug);
  if (reduced.pivots.size() < n || reduced.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.matrix(r, n + c);
  return inv;
}

AffineReducer::AffineReducer(const RationalMatrix& equations, std::span<const Rational> rhs)
    : cols_(equations.cols()) {
  if (rhs.size() != equations.rows()) throw std::invalid_argument("AffineReducer: rhs length mismatch");
  RationalMatrix aug(equations.rows(), cols_ + 1);
  for (std::size_t r = 0; r < equations.rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = equations(r, c);
    aug(r, cols_) = rhs[r];
  }
  auto reduced = rref(aug);
  if (!reduced.pivots.empty() && reduced.pivots.back() == cols_) {
    throw std::invalid_argument("AffineReducer: inconsistent equation system");
  }
  rows_ = RationalMatrix(0, cols_);
  for (std::size_t r = 0; r < reduced.matrix.rows(); ++r) {
    rows_.append_row(reduced.matrix.row(r).first(cols_));
    rhs_.push_back(reduced.matrix(r, cols_));
  }
  pivots_ = std::move(reduced.pivots);
}

void AffineReducer::reduce(RationalVector& coeffs, Rational& bound) const {
  if (coeffs.size() != cols_) throw std::invalid_argument("AffineReducer::reduce: width mismatch");
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    const Rational factor = coeffs[pivots_[r]];
    if (sgn(factor) == 0) continue;
    const auto row = rows_.row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(row[c]) != 0) coeffs[c] -= factor * row[c];
    }
    bound -= factor * rhs_[r];
  }
}

}  // namespace bellpoly
