#include "bellpoly/linalg.hpp"
#include "bellpoly/scenario.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <random>

using namespace bellpoly;

TEST_CASE("rationals stay canonical and round-trip through text") {
  const Rational q = parse_rational("6/-4");  // sign moves to the numerator
  CHECK(q == frac(-3, 2));
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testing::random_rational(rng, 50, 30);
    const Rational b = testing::random_rational(rng, 50, 30);
    const Rational c = a * b + a - b;
    CHECK(parse_rational(to_string(c)) == c);
    Rational copy = c;
    copy.canonicalize();
    CHECK(copy.get_num() == c.get_num());
    CHECK(copy.get_den() == c.get_den());
    CHECK(c.get_den() > 0);
  }
}

TEST_CASE("primitive_scale clears denominators and common factors") {
  const RationalVector v{frac(2, 3), frac(4, 3), Rational(2)};
  const Rational s = primitive_scale(v);
  CHECK(s == frac(3, 2));
  CHECK(primitive_scale(RationalVector{0, 0}) == 1);
}

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, 5)) == 0);
  CHECK(rank(RationalMatrix()) == 0);
  CHECK(rank(constraint_matrix(Scenario(3)).rows) == 12);
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    const auto m = testing::random_matrix(rng, dim(rng), dim(rng), 0.5);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank of block identity plus dependent rows is the block size") {
  std::mt19937 rng(3);
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t cols = k + 3;
    RationalMatrix m(0, cols);
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < k; ++i) {
      RationalVector row(cols);
      row[i] = 1;
      for (std::size_t j = k; j < cols; ++j) row[j] = testing::random_rational(rng);
      basis.push_back(row);
      m.append_row(row);
    }
    for (int extra = 0; extra < 4; ++extra) {
      RationalVector row(cols);
      for (const auto& b : basis) {
        const Rational c = testing::random_rational(rng);
        for (std::size_t j = 0; j < cols; ++j) row[j] += c * b[j];
      }
      m.append_row(row);
    }
    CHECK(rank(m) == k);
    CHECK(rref(m).pivots.size() == k);
  }
}

TEST_CASE("affine dimension") {
  CHECK(affine_dim(std::vector<RationalVector>{{1, 2, 3, 4}}) == 0);
  const std::vector<RationalVector> collinear{{0, 0, 0, 0}, {1, 2, 3, 4}, {3, 6, 9, 12}};
  CHECK(affine_dim(collinear) == 1);
  CHECK(affine_dim(all_generator_vectors(Scenario(2))) == 8);
  CHECK_THROWS_AS(affine_dim(std::vector<RationalVector>{}), std::invalid_argument);
  CHECK_THROWS_AS(affine_dim(std::vector<RationalVector>{{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("determinant and inverse agree") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testing::random_matrix(rng, 4, 4, 0.2);
    const auto inv = inverse(m);
    const Rational det = determinant(m);
    CHECK(inv.has_value() == (sgn(det) != 0));
    if (!inv) continue;
    for (std::size_t c = 0; c < 4; ++c) {
      RationalVector col(4);
      for (std::size_t r = 0; r < 4; ++r) col[r] = (*inv)(r, c);
      const auto e = m.multiply(col);
      for (std::size_t r = 0; r < 4; ++r) CHECK(e[r] == (r == c ? 1 : 0));
    }
  }
  const RationalMatrix minor = RationalMatrix::from_rows({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}});
  CHECK(determinant(minor) == 1);
}

TEST_CASE("affine reducer picks one representative per affine class") {
  // x0 + x1 = 1 on Q^3.
  const RationalMatrix eq = RationalMatrix::from_rows({{1, 1, 0}});
  const AffineReducer reducer(eq, RationalVector{1});
  RationalVector a{2, 5, 1};
  Rational ba = 3;
  RationalVector b{0, 3, 1};  // a - 2*(x0 + x1 = 1)
  Rational bb = 1;
  reducer.reduce(a, ba);
  reducer.reduce(b, bb);
  CHECK(a == b);
  CHECK(ba == bb);
  CHECK(sgn(a[0]) == 0);

  const RationalMatrix bad = RationalMatrix::from_rows({{1, 0}, {1, 0}});
  CHECK_THROWS_AS(AffineReducer(bad, RationalVector{0, 1}), std::invalid_argument);
}

TEST_CASE("row basis membership") {
  RowBasis basis(3);
  CHECK(basis.insert(RationalVector{1, 1, 0}));
  CHECK(basis.insert(RationalVector{0, 1, 1}));
  CHECK_FALSE(basis.insert(RationalVector{1, 2, 1}));
  CHECK(basis.contains(RationalVector{2, 3, 1}));
  CHECK_FALSE(basis.contains(RationalVector{0, 0, 1}));
  CHECK(basis.rank() == 2);
}
