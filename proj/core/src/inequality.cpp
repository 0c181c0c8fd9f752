#include "bellpoly/inequality.hpp"

#include <stdexcept>

namespace bellpoly {

Space Space::behavior(int d) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
  return {SpaceKind::behavior, d, static_cast<std::size_t>(4 * d * d)};
}

Space Space::correlator(int d) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
  return {SpaceKind::correlator, d, static_cast<std::size_t>(4 * d)};
}

Space Space::generic(std::size_t dim) { return {SpaceKind::generic, 0, dim}; }

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::behavior: return "behavior";
    case SpaceKind::correlator: return "correlator";
    case SpaceKind::generic: return "generic";
  }
  return "unknown";
}

std::string describe(const Space& space) {
  if (space.kind == SpaceKind::generic) return "generic(" + std::to_string(space.dim) + ")";
  return to_string(space.kind) + "(d=" + std::to_string(space.d) + ")";
}

Inequality::Inequality(Space space_, RationalVector coeffs_, Rational bound_)
    : space(space_), coeffs(std::move(coeffs_)), bound(std::move(bound_)) {
  if (coeffs.size() != space.dim) {
    throw std::invalid_argument("inequality has " + std::to_string(coeffs.size()) +
                                " coefficients, space " + describe(space) + " needs " +
                                std::to_string(space.dim));
  }
}

Inequality Inequality::zero(Space space) { return Inequality(space, RationalVector(space.dim), 0); }

bool Inequality::is_zero() const {
  for (const auto& c : coeffs) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

int compare(const Inequality& a, const Inequality& b) {
  if (const int c = lex_compare(a.coeffs, b.coeffs); c != 0) return c;
  const int c = cmp(a.bound, b.bound);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Rational eval(const Inequality& ineq, std::span<const Rational> point) {
  if (point.size() != ineq.coeffs.size()) {
    throw std::invalid_argument("eval: point length " + std::to_string(point.size()) +
                                " does not match space " + describe(ineq.space));
  }
  return dot(ineq.coeffs, point);
}

}  // namespace bellpoly
