#pragma once

#include "bellpoly/correlators.hpp"
#include "bellpoly/inequality.hpp"
#include "bellpoly/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bellpoly {

/// Generators of the local polytope of a Bell space: the d^4 behavior
/// generators in strategy order, or the d^3 projected generators sorted.
std::vector<RationalVector> local_vertices(const Space& space);

/// Exact maximum of the inequality's left-hand side over local_vertices.
Rational local_max(const Inequality& ineq);

struct NosignalingOptimum {
  Rational value;
  Behavior maximizer;
};

/// Exact LP optimum over normalized, no-signaling, nonnegative behaviors.
/// Correlator inequalities are lifted first.
NosignalingOptimum nosignaling_optimum(const Inequality& ineq);
Rational nosignaling_max(const Inequality& ineq);

struct CatalogEntry {
  std::string name;
  Inequality ineq;
};

/// Named reference inequalities of a Bell space: CHSH (d = 2), CGLMP and
/// positivity, in that order.
std::vector<CatalogEntry> catalog(const Space& space);

struct CatalogMatch {
  std::string name;    // "CHSH", "CGLMP" or "positivity"
  Inequality image;    // group image of the catalog entry, in its own scaling
  Rational value;      // image evaluated at the queried point
};

struct Weight {
  std::string label;  // strategy "a1,a2,b1,b2" or differences "n11,n12,n21,n22"
  Rational weight;
};

struct Verdict {
  bool local = false;
  std::vector<Weight> weights;               // local only, nonzero weights
  std::optional<Inequality> certificate;     // nonlocal only: violated facet
  std::optional<Inequality> farkas;          // nonlocal only: raw Farkas inequality
  std::optional<Rational> violation;         // certificate value minus bound
  std::optional<CatalogMatch> match;         // certificate class, when known
  bool catalog_checked = false;              // false when d is beyond catalog range
};

/// Decides P = sum_lambda w_lambda G_lambda, w >= 0, sum w = 1 by exact LP.
/// Local: the weights (re-verified exactly). Nonlocal: the Farkas separating
/// inequality normalized so its bound equals its local maximum, and a facet
/// found by polar separation that the point violates; the facet is matched
/// against the catalog for d <= 3. Throws std::invalid_argument naming the
/// violated precondition when p is not a no-signaling probability behavior.
Verdict local_decompose(const Behavior& p);

/// Same over the projected generators; catalog matching for d <= 4.
Verdict corr_local_decompose(const CorrVector& c);

}  // namespace bellpoly
