#pragma once

#include "bellpoly/matrix.hpp"
#include "bellpoly/rational.hpp"

#include <vector>

namespace bellpoly {

/// maximize objective.x
///   s.t. eq_rows x = eq_rhs, ineq_rows x <= ineq_rhs, x_j >= 0 where nonneg[j].
struct LPProblem {
  RationalVector objective;
  RationalMatrix eq_rows;
  RationalVector eq_rhs;
  RationalMatrix ineq_rows;
  RationalVector ineq_rhs;
  std::vector<bool> nonneg;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LPStatus { optimal, infeasible, unbounded };

const char* to_string(LPStatus status);

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational optimum;          // optimal only
  RationalVector primal;     // optimal only
  /// Infeasible only: multipliers for the equality rows followed by the
  /// inequality rows. With A the stacked constraint matrix and b the stacked
  /// right-hand side: y >= 0 on inequality rows, (y^T A)_j >= 0 for
  /// nonnegative variables, (y^T A)_j = 0 for free variables, and y^T b < 0.
  RationalVector certificate;
};

/// Exact two-phase primal simplex on a dense rational tableau. Bland's rule
/// for entering and leaving variables (lowest index on ties), so the result is
/// deterministic and cycling cannot occur. Free variables are split into a
/// difference of two nonnegative columns. Throws std::invalid_argument on
/// dimension mismatch.
LPResult lp_max(const LPProblem& problem);

LPResult lp_max(const RationalVector& objective, const RationalMatrix& eq_rows,
                const RationalVector& eq_rhs, const RationalMatrix& ineq_rows,
                const RationalVector& ineq_rhs, const std::vector<bool>& nonneg_vars);

/// Exact feasibility check of a primal point.
bool is_feasible(const LPProblem& problem, const RationalVector& x);

/// Exact check of a Farkas certificate as documented on LPResult.
bool verify_farkas(const LPProblem& problem, const RationalVector& y);

}  // namespace bellpoly
