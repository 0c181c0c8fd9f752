#pragma once

#include "bellpoly/inequality.hpp"
#include "bellpoly/linalg.hpp"
#include "bellpoly/matrix.hpp"
#include "bellpoly/rational.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellpoly {

/// Affine hull equations of a Bell space: block normalization for correlator
/// space, normalization plus no-signaling for behavior space. Cached.
const AffineReducer& space_reducer(const Space& space);

/// Integer form with gcd 1 over coefficients and bound, after reducing modulo
/// the space's affine equations so that equivalent functionals on the polytope
/// get the same representative. Only positive scaling is applied, so the
/// direction of the inequality never changes. Generic spaces skip the
/// reduction. Throws std::invalid_argument when the reduced coefficients are
/// all zero.
Inequality canonicalize(const Inequality& ineq);
Inequality canonicalize(const Inequality& ineq, const AffineReducer& reducer);

/// Affine hull of a finite point set and a full-dimensional coordinate chart
/// on it. The chart keeps a subset of the ambient coordinates (the pivot
/// columns of rref([1 | V])), so integral points stay integral.
class AffineHull {
 public:
  /// Throws std::invalid_argument on empty or ragged input.
  explicit AffineHull(std::vector<RationalVector> points);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return chart_.size(); }
  /// Sorted, deduplicated input points.
  const std::vector<RationalVector>& points() const { return points_; }
  /// Ambient coordinates kept by the chart.
  const std::vector<std::size_t>& chart() const { return chart_; }
  /// One equation per dropped coordinate: x_j - sum c_i x_chart(i) = c_0.
  const RationalMatrix& equations() const { return equations_; }
  const RationalVector& equation_rhs() const { return equation_rhs_; }

  RationalVector reduce(std::span<const Rational> x) const;
  /// Ambient inequality equal to `coeffs . y <= bound` on the hull, where y
  /// are chart coordinates.
  Inequality lift(const Space& space, std::span<const Rational> coeffs, const Rational& bound) const;
  bool contains(std::span<const Rational> x) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<RationalVector> points_;
  std::vector<std::size_t> chart_;
  RationalMatrix equations_;
  RationalVector equation_rhs_;
};

struct VRep {
  Space space;
  std::vector<RationalVector> vertices;
};

struct HRep {
  Space space;
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  RationalMatrix equations;   // affine hull, one row per dropped coordinate
  RationalVector equation_rhs;
  std::vector<Inequality> facets;  // canonical, sorted, deduplicated
  bool complete = true;
};

/// Raised when the vertex set spans fewer dimensions than required.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a deadline passes during an operation that has no meaningful
/// partial result.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  /// Checked between insertion steps and during pair generation. When it
  /// passes, the result holds only rays already proven to be facets and
  /// `complete` is false.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Required hull dimension; Bell spaces default to their known value.
  std::optional<std::size_t> expected_dim;
  std::function<void(const std::string&)> progress;
};

/// Double description in the hull chart: the homogenized cone
/// {z : (1, y_v) . z >= 0 for every vertex v} is built by inserting vertex
/// rows in sorted order, starting from a simplicial cone on the first
/// affinely independent ones. Extreme rays are kept as primitive integer
/// vectors and adjacency is decided combinatorially from zero sets.
HRep enumerate_facets(const VRep& vrep, const EnumerateOptions& options = {});

VRep correlator_vrep(int d);
VRep behavior_vrep(int d);
/// Dimension of the local polytope of a Bell space: 4(d-1) or 4d(d-1).
std::size_t bell_polytope_dim(const Space& space);

struct SaturationReport {
  std::size_t count = 0;  // vertices with equality
  std::size_t rank = 0;   // rank of the saturating (1, v)
  bool valid = true;      // no vertex violates the inequality
  bool supporting = false;
};

SaturationReport saturation_count(const Inequality& ineq, std::span<const RationalVector> vertices);

enum class Triviality { trivial, nontrivial };
const char* to_string(Triviality t);

/// Trivial when no normalized no-signaling behavior exceeds the bound
/// (correlator inequalities are lifted first). Exact LP.
Triviality classify_trivial(const Inequality& ineq);

/// Polar separation: with c the vertex centroid, maximize a.x - b over
/// {(a, b) : a.y_v <= b for all vertices, a.c - b = -1} in chart coordinates.
/// The optimum is a vertex of the polar polytope, so the returned inequality
/// is a facet (canonical form). Returns nullopt when `point` lies in the
/// polytope. Throws std::invalid_argument when `point` is off the hull.
std::optional<Inequality> separating_facet(const AffineHull& hull, const Space& space,
                                           std::span<const Rational> point);

}  // namespace bellpoly
