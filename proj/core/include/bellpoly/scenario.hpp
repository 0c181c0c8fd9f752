#pragma once

#include "bellpoly/inequality.hpp"
#include "bellpoly/matrix.hpp"
#include "bellpoly/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace bellpoly {

/// Two parties, two settings each, d outcomes per measurement.
class Scenario {
 public:
  /// Throws std::invalid_argument for d < 2.
  explicit Scenario(int d);
  int d() const { return d_; }
  std::size_t behavior_dim() const { return static_cast<std::size_t>(4 * d_ * d_); }
  std::size_t strategy_count() const { return static_cast<std::size_t>(d_) * d_ * d_ * d_; }

 private:
  int d_;
};

/// Flat index of P(A_a = k, B_b = s); a, b in {1, 2}, k, s in [0, d).
/// Layout: ((a-1)*2 + (b-1)) * d^2 + k*d + s.
constexpr std::size_t behavior_index(int d, int a, int b, int k, int s) {
  return static_cast<std::size_t>(((a - 1) * 2 + (b - 1)) * d * d + k * d + s);
}

/// Preassigned outcomes (A1, A2, B1, B2) of a deterministic local strategy.
struct DeterministicStrategy {
  int a1 = 0;
  int a2 = 0;
  int b1 = 0;
  int b2 = 0;

  int alice(int a) const { return a == 1 ? a1 : a2; }
  int bob(int b) const { return b == 1 ? b1 : b2; }

  friend auto operator<=>(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

std::string to_string(const DeterministicStrategy& lambda);
/// Position of `lambda` in lexicographic (a1, a2, b1, b2) order.
std::size_t strategy_index(int d, const DeterministicStrategy& lambda);
DeterministicStrategy strategy_from_index(int d, std::size_t index);
void check_strategy(int d, const DeterministicStrategy& lambda);

/// Joint outcome table for all four settings as one 4d^2 vector. Entries are
/// arbitrary rationals; probability conditions are predicates.
class Behavior {
 public:
  explicit Behavior(int d);
  /// Throws std::invalid_argument when coords.size() != 4d^2.
  Behavior(int d, RationalVector coords);

  int d() const { return d_; }
  const RationalVector& coords() const { return coords_; }
  RationalVector& coords() { return coords_; }

  Rational& at(int a, int b, int k, int s) { return coords_[behavior_index(d_, a, b, k, s)]; }
  const Rational& at(int a, int b, int k, int s) const { return coords_[behavior_index(d_, a, b, k, s)]; }

  friend bool operator==(const Behavior&, const Behavior&) = default;

 private:
  int d_;
  RationalVector coords_;
};

/// The four coordinates equal to 1 in G_lambda, in setting order.
std::array<std::size_t, 4> generator_support(int d, const DeterministicStrategy& lambda);

/// G_lambda: P(A_a = k, B_b = s) = [A_a = k][B_b = s]. Throws on out-of-range lambda.
Behavior generator(const Scenario& scenario, const DeterministicStrategy& lambda);

std::vector<DeterministicStrategy> all_strategies(const Scenario& scenario);
/// The d^4 generators in lexicographic strategy order.
std::vector<Behavior> all_generators(const Scenario& scenario);
std::vector<RationalVector> all_generator_vectors(const Scenario& scenario);

struct ConstraintSystem {
  RationalMatrix rows;
  RationalVector rhs;
};

/// 4 normalization rows (rhs 1, setting order) followed by 4d no-signaling
/// rows (rhs 0): for A1, A2, B1, B2 and each outcome, the marginal under the
/// other party's first setting minus the marginal under the second.
ConstraintSystem constraint_matrix(const Scenario& scenario);

Behavior uniform_behavior(const Scenario& scenario);

bool is_normalized(const Behavior& p);
bool is_nosignaling(const Behavior& p);
/// Normalized, no-signaling and entrywise nonnegative.
bool is_probability(const Behavior& p);

/// Affine dimension of the local polytope computed from its generators. The
/// enumeration stops once the rank reaches 4d^2 - rank(constraint_matrix),
/// which every generator provably respects (all of them are checked against
/// the constraint rows first).
std::size_t polytope_affine_dim(const Scenario& scenario);

/// The 2d-1 vectors |A1> (+) |A2> in Q^{2d} with (A1, A2) in
/// {(0, j)} U {(i, d-1) : i >= 1}; they are linearly independent.
std::vector<RationalVector> single_party_basis(int d);
/// Strategies whose generators are tensor products of two single_party_basis
/// vectors: (2d-1)^2 linearly independent generators.
std::vector<DeterministicStrategy> tensor_basis_strategies(int d);

}  // namespace bellpoly
