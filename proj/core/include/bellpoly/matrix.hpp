#pragma once

#include "bellpoly/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bellpoly {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// All rows must have equal length; `cols` is used when `rows` is empty.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  RationalVector row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);

  RationalMatrix transpose() const;
  RationalVector multiply(std::span<const Rational> x) const;

  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace bellpoly
