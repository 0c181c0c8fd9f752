#include "bellpoly/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bellpoly {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(0, cols);
  m.entries_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RationalVector RationalMatrix::row_vector(std::size_t r) const {
  const auto view = row(r);
  return {view.begin(), view.end()};
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

}  // namespace bellpoly
