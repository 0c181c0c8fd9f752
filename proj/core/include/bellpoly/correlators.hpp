#pragma once

#include "bellpoly/inequality.hpp"
#include "bellpoly/rational.hpp"
#include "bellpoly/scenario.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace bellpoly {

/// Flat index of P(A_a - B_b = n mod d): ((a-1)*2 + (b-1)) * d + n.
constexpr std::size_t corr_index(int d, int a, int b, int n) {
  return static_cast<std::size_t>(((a - 1) * 2 + (b - 1)) * d + n);
}

/// The 4d generalized correlation probabilities P(A_a - B_b = n mod d).
class CorrVector {
 public:
  explicit CorrVector(int d);
  /// Throws std::invalid_argument when coords.size() != 4d.
  CorrVector(int d, RationalVector coords);

  int d() const { return d_; }
  const RationalVector& coords() const { return coords_; }
  RationalVector& coords() { return coords_; }

  Rational& at(int a, int b, int n) { return coords_[corr_index(d_, a, b, n)]; }
  const Rational& at(int a, int b, int n) const { return coords_[corr_index(d_, a, b, n)]; }

  friend bool operator==(const CorrVector&, const CorrVector&) = default;

 private:
  int d_;
  RationalVector coords_;
};

/// c(a, b, n) = sum_j p(a, b, (n + j) mod d, j).
CorrVector project(const Behavior& p);

/// Image of G_lambda: a single 1 per block at n = A_a - B_b mod d.
CorrVector projected_generator(int d, const DeterministicStrategy& lambda);

/// The d^3 distinct projected generators, sorted lexicographically by
/// coordinates.
std::vector<CorrVector> projected_generators(int d);
std::vector<RationalVector> projected_generator_vectors(int d);

/// Differences (A1-B1, A1-B2, A2-B1, A2-B2) mod d read off a 0/1 projected
/// generator. Throws if `c` is not one.
std::array<int, 4> corr_vertex_label(const CorrVector& c);

std::size_t corr_affine_dim(int d);

CorrVector uniform_corr(int d);
/// Every block sums to 1.
bool is_corr_normalized(const CorrVector& c);
/// Normalized and entrywise nonnegative.
bool is_corr_probability(const CorrVector& c);

/// <A_a B_b> = P(A_a - B_b = 0) - P(A_a - B_b = 1) for d = 2, with outcome 0
/// read as +1 and 1 as -1. Order: a1b1, a1b2, a2b1, a2b2. Throws for d != 2.
std::array<Rational, 4> chsh_correlators(const Behavior& p);

/// <A1B1> + <A1B2> + <A2B1> - <A2B2> <= 2 in d = 2 correlator coordinates.
Inequality chsh_inequality();

/// CGLMP functional over the 4d correlator coordinates, bound 2.
Inequality cglmp_corr_inequality(int d);

/// Pullback along the projection: coefficient of p(a, b, k, s) is the
/// coefficient of c(a, b, k - s mod d). Throws unless `ineq` lives in
/// correlator space.
Inequality lift(const Inequality& ineq);

}  // namespace bellpoly
