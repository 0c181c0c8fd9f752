#pragma once

#include "bellpoly/correlators.hpp"
#include "bellpoly/inequality.hpp"
#include "bellpoly/scenario.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bellpoly {

/// One element of the relabeling group of a Bell space.
///
/// Behavior space: outcome permutations of A1, A2, B1, B2 are applied first,
/// then the observable swaps, then the party swap. Correlator space uses the
/// subgroup that commutes with the projection: outcome shifts of the four
/// observables and a global reflection (every outcome negated mod d), then the
/// same swaps.
struct SymmetryOp {
  Space space;
  bool swap_parties = false;
  bool swap_A = false;
  bool swap_B = false;
  std::array<std::vector<int>, 4> perms;  // behavior space, order A1, A2, B1, B2
  std::array<int, 4> shifts = {};         // correlator space, order A1, A2, B1, B2
  bool reflect = false;                   // correlator space

  static SymmetryOp identity(const Space& space);
};

/// perm[i] is the image of coordinate i: (g.x)[perm[i]] = x[i].
using Permutation = std::vector<std::size_t>;

/// Throws std::invalid_argument when the op does not fit its space.
Permutation to_permutation(const SymmetryOp& op);
/// (g o h)[i] = g[h[i]].
Permutation compose(const Permutation& g, const Permutation& h);
Permutation invert(const Permutation& g);

RationalVector permute(const Permutation& g, std::span<const Rational> x);
Behavior apply(const SymmetryOp& op, const Behavior& p);
CorrVector apply(const SymmetryOp& op, const CorrVector& c);
/// Coefficients permuted like coordinates, bound unchanged, so that
/// eval(g.ineq, g.x) = eval(ineq, x).
Inequality apply(const SymmetryOp& op, const Inequality& ineq);
Inequality permute(const Permutation& g, const Inequality& ineq);

/// The behavior-space op inducing a correlator-space op: outcome maps
/// k -> k + shift, followed by k -> -k when reflecting.
SymmetryOp to_behavior_op(const SymmetryOp& corr_op);

/// Behavior-space op acting on deterministic strategies.
DeterministicStrategy apply(const SymmetryOp& op, const DeterministicStrategy& lambda);

/// 8 (d!)^4 in behavior space; 16 d^3 for the correlator subgroup (a common
/// shift of all four observables acts trivially, so A1's shift is fixed at 0).
std::size_t group_order(const Space& space);

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymmetryOptions {
  /// Behavior space with d >= 4 is refused unless set.
  bool allow_large = false;
  unsigned threads = 1;
};

/// Calls fn on every group element in a fixed order.
void for_each_element(const Space& space, const std::function<void(const SymmetryOp&)>& fn,
                      const SymmetryOptions& options = {});
std::vector<Permutation> group_permutations(const Space& space, const SymmetryOptions& options = {});

/// Lexicographically smallest canonicalize(g.ineq) over the group.
Inequality canonical_class(const Inequality& ineq, const SymmetryOptions& options = {});
/// Throws std::invalid_argument on space mismatch.
bool equivalent(const Inequality& a, const Inequality& b, const SymmetryOptions& options = {});

/// A group element mapping `from` onto `to` up to the canonical form, if any.
std::optional<SymmetryOp> find_mapping(const Inequality& from, const Inequality& to,
                                       const SymmetryOptions& options = {});

}  // namespace bellpoly
