#include "bellpoly/lp.hpp"

#include <limits>
#include <stdexcept>

namespace bellpoly {

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_dimensions(const LPProblem& p) {
  const std::size_t n = p.num_vars();
  if (p.nonneg.size() != n) throw std::invalid_argument("lp_max: nonneg flag count mismatch");
  if (p.eq_rows.rows() != p.eq_rhs.size()) throw std::invalid_argument("lp_max: eq rhs mismatch");
  if (p.ineq_rows.rows() != p.ineq_rhs.size()) throw std::invalid_argument("lp_max: ineq rhs mismatch");
  if (p.eq_rows.rows() > 0 && p.eq_rows.cols() != n) throw std::invalid_argument("lp_max: eq width mismatch");
  if (p.ineq_rows.rows() > 0 && p.ineq_rows.cols() != n) {
    throw std::invalid_argument("lp_max: ineq width mismatch");
  }
}

// Tableau over standardized rows A'x' = b' (b' >= 0), x' >= 0. Column layout:
// structural columns, slack columns, then one artificial column per row.
class Tableau {
 public:
  explicit Tableau(const LPProblem& p) : problem_(p) {
    const std::size_t n = p.num_vars();
    const std::size_t m_eq = p.eq_rows.rows();
    const std::size_t m_in = p.ineq_rows.rows();
    m_ = m_eq + m_in;

    pos_col_.resize(n);
    neg_col_.assign(n, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = col++;
      if (!p.nonneg[j]) neg_col_[j] = col++;
    }
    slack_begin_ = col;
    art_begin_ = slack_begin_ + m_in;
    width_ = art_begin_ + m_;

    rows_.assign(m_, RationalVector(width_));
    rhs_.resize(m_);
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool is_eq = i < m_eq;
      const auto src = is_eq ? p.eq_rows.row(i) : p.ineq_rows.row(i - m_eq);
      Rational b = is_eq ? p.eq_rhs[i] : p.ineq_rhs[i - m_eq];
      const int s = sgn(b) < 0 ? -1 : 1;
      sign_[i] = s;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(src[j]) == 0) continue;
        rows_[i][pos_col_[j]] = s * src[j];
        if (neg_col_[j] != kNone) rows_[i][neg_col_[j]] = -s * src[j];
      }
      if (!is_eq) rows_[i][slack_begin_ + (i - m_eq)] = s;
      rows_[i][art_begin_ + i] = 1;
      rhs_[i] = s * b;
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = art_begin_ + i;
    active_.assign(m_, true);
  }

  LPResult solve() {
    // Phase 1: maximize -(sum of artificials).
    cost_.assign(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[art_begin_ + i] = -1;
    price_out();
    if (!run(art_begin_ + m_)) throw std::logic_error("lp_max: phase 1 reported unbounded");

    if (sgn(value_) < 0) return infeasible_result();

    drive_out_artificials();

    // Phase 2 on the original objective with artificials barred from entering.
    cost_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < problem_.num_vars(); ++j) {
      cost_[pos_col_[j]] = problem_.objective[j];
      if (neg_col_[j] != kNone) cost_[neg_col_[j]] = -problem_.objective[j];
    }
    price_out();
    LPResult result;
    if (!run(art_begin_)) {
      result.status = LPStatus::unbounded;
      return result;
    }
    result.status = LPStatus::optimal;
    result.optimum = value_;
    result.primal = primal();
    return result;
  }

 private:
  void price_out() {
    reduced_ = cost_;
    value_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      value_ += cb * rhs_[i];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const Rational inv = 1 / rows_[p][q];
    for (auto& x : rows_[p]) {
      if (sgn(x) != 0) x *= inv;
    }
    rhs_[p] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || !active_[i] || sgn(rows_[i][q]) == 0) continue;
      const Rational factor = rows_[i][q];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[p][j]) != 0) rows_[i][j] -= factor * rows_[p][j];
      }
      rhs_[i] -= factor * rhs_[p];
    }
    if (sgn(reduced_[q]) != 0) {
      const Rational factor = reduced_[q];
      value_ += factor * rhs_[p];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(rows_[p][j]) != 0) reduced_[j] -= factor * rows_[p][j];
      }
    }
    basis_[p] = q;
  }

  // Bland's rule. Columns >= `limit` never enter. Returns false if unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t q = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) > 0) {
          q = j;
          break;
        }
      }
      if (q == kNone) return true;
      std::size_t p = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sgn(rows_[i][q]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][q];
        if (p == kNone || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[p])) {
          p = i;
          best_ratio = std::move(ratio);
        }
      }
      if (p == kNone) return false;
      pivot(p, q);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < art_begin_) continue;
      std::size_t q = kNone;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          q = j;
          break;
        }
      }
      if (q == kNone) {
        active_[i] = false;  // redundant row
      } else {
        pivot(i, q);
      }
    }
  }

  LPResult infeasible_result() const {
    // Phase-1 duals: reduced cost of artificial i is -1 - pi_i.
    LPResult result;
    result.status = LPStatus::infeasible;
    result.certificate.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational pi = -1 - reduced_[art_begin_ + i];
      result.certificate[i] = sign_[i] * pi;
    }
    return result;
  }

  RationalVector primal() const {
    RationalVector standard(width_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i]) standard[basis_[i]] = rhs_[i];
    }
    RationalVector x(problem_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = standard[pos_col_[j]];
      if (neg_col_[j] != kNone) x[j] -= standard[neg_col_[j]];
    }
    return x;
  }

  const LPProblem& problem_;
  std::size_t m_ = 0;
  std::size_t width_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::vector<std::size_t> pos_col_;
  std::vector<std::size_t> neg_col_;
  std::vector<RationalVector> rows_;
  RationalVector rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  RationalVector cost_;
  RationalVector reduced_;
  Rational value_;
};

}  // namespace

LPResult lp_max(const LPProblem& problem) {
  check_dimensions(problem);
  Tableau tableau(problem);
  LPResult result = tableau.solve();
  if (result.status == LPStatus::optimal) {
    if (!is_feasible(problem, result.primal) || dot(problem.objective, result.primal) != result.optimum) {
      throw std::logic_error("lp_max: optimal point failed exact verification");
    }
  } else if (result.status == LPStatus::infeasible) {
    if (!verify_farkas(problem, result.certificate)) {
      throw std::logic_error("lp_max: Farkas certificate failed exact verification");
    }
  }
  return result;
}

LPResult lp_max(const RationalVector& objective, const RationalMatrix& eq_rows, const RationalVector& eq_rhs,
                const RationalMatrix& ineq_rows, const RationalVector& ineq_rhs,
                const std::vector<bool>& nonneg_vars) {
  return lp_max(LPProblem{objective, eq_rows, eq_rhs, ineq_rows, ineq_rhs, nonneg_vars});
}

bool is_feasible(const LPProblem& p, const RationalVector& x) {
  if (x.size() != p.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (p.nonneg[j] && sgn(x[j]) < 0) return false;
  }
  for (std::size_t i = 0; i < p.eq_rows.rows(); ++i) {
    if (dot(p.eq_rows.row(i), x) != p.eq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < p.ineq_rows.rows(); ++i) {
    if (dot(p.ineq_rows.row(i), x) > p.ineq_rhs[i]) return false;
  }
  return true;
}

bool verify_farkas(const LPProblem& p, const RationalVector& y) {
  const std::size_t m_eq = p.eq_rows.rows();
  const std::size_t m_in = p.ineq_rows.rows();
  if (y.size() != m_eq + m_in) return false;
  for (std::size_t i = 0; i < m_in; ++i) {
    if (sgn(y[m_eq + i]) < 0) return false;
  }
  for (std::size_t j = 0; j < p.num_vars(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < m_eq; ++i) col += y[i] * p.eq_rows(i, j);
    for (std::size_t i = 0; i < m_in; ++i) col += y[m_eq + i] * p.ineq_rows(i, j);
    if (p.nonneg[j] ? sgn(col) < 0 : sgn(col) != 0) return false;
  }
  Rational yb = 0;
  for (std::size_t i = 0; i < m_eq; ++i) yb += y[i] * p.eq_rhs[i];
  for (std::size_t i = 0; i < m_in; ++i) yb += y[m_eq + i] * p.ineq_rhs[i];
  return sgn(yb) < 0;
}

}  // namespace bellpoly
