#pragma once

#include "bellpoly/rational.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace bellpoly {

enum class SpaceKind { behavior, correlator, generic };

/// Coordinate space an inequality lives in. Behavior space has 4d^2
/// coordinates, correlator space 4d; generic spaces carry only a dimension
/// and exist for plain polytopes that are not Bell scenarios.
struct Space {
  SpaceKind kind = SpaceKind::generic;
  int d = 0;
  std::size_t dim = 0;

  static Space behavior(int d);
  static Space correlator(int d);
  static Space generic(std::size_t dim);

  friend bool operator==(const Space&, const Space&) = default;
};

std::string to_string(SpaceKind kind);
std::string describe(const Space& space);

/// coeffs . x <= bound.
struct Inequality {
  Space space;
  RationalVector coeffs;
  Rational bound;

  Inequality() = default;
  /// Throws std::invalid_argument when coeffs.size() != space.dim.
  Inequality(Space space, RationalVector coeffs, Rational bound);

  static Inequality zero(Space space);
  bool is_zero() const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Total order: coefficients lexicographically, then bound.
int compare(const Inequality& a, const Inequality& b);

/// Exact inner product coeffs . point; throws on length mismatch.
Rational eval(const Inequality& ineq, std::span<const Rational> point);

}  // namespace bellpoly
