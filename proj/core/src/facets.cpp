#include "bellpoly/facets.hpp"

#include "bellpoly/correlators.hpp"
#include "bellpoly/lp.hpp"
#include "bellpoly/membership.hpp"
#include "bellpoly/scenario.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace bellpoly {

namespace {

RationalMatrix correlator_equations(int d, RationalVector& rhs) {
  const auto n = static_cast<std::size_t>(4 * d);
  RationalMatrix eq(0, n);
  RationalVector row(n);
  for (int block = 0; block < 4; ++block) {
    std::fill(row.begin(), row.end(), Rational(0));
    for (int k = 0; k < d; ++k) row[static_cast<std::size_t>(block * d + k)] = 1;
    eq.append_row(row);
    rhs.push_back(1);
  }
  return eq;
}

}  // namespace

const AffineReducer& space_reducer(const Space& space) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<AffineReducer>> cache;
  if (space.kind == SpaceKind::generic) throw std::invalid_argument("generic spaces have no built-in equations");
  const std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(space.kind), space.d}];
  if (!slot) {
    if (space.kind == SpaceKind::behavior) {
      const auto sys = constraint_matrix(Scenario(space.d));
      slot = std::make_unique<AffineReducer>(sys.rows, sys.rhs);
    } else {
      RationalVector rhs;
      const auto eq = correlator_equations(space.d, rhs);
      slot = std::make_unique<AffineReducer>(eq, rhs);
    }
  }
  return *slot;
}

Inequality canonicalize(const Inequality& ineq, const AffineReducer& reducer) {
  Inequality out = ineq;
  if (reducer.cols() == out.coeffs.size()) reducer.reduce(out.coeffs, out.bound);
  if (out.is_zero()) {
    throw std::invalid_argument("cannot canonicalize: coefficients vanish on the affine hull of " +
                                describe(ineq.space));
  }
  RationalVector all = out.coeffs;
  all.push_back(out.bound);
  const Rational scale = primitive_scale(all);
  for (auto& c : out.coeffs) c *= scale;
  out.bound *= scale;
  return out;
}

Inequality canonicalize(const Inequality& ineq) {
  if (ineq.space.kind == SpaceKind::generic) return canonicalize(ineq, AffineReducer());
  return canonicalize(ineq, space_reducer(ineq.space));
}

AffineHull::AffineHull(std::vector<RationalVector> points) {
  if (points.empty()) throw std::invalid_argument("affine hull of an empty point set");
  ambient_ = points.front().size();
  for (const auto& p : points) {
    if (p.size() != ambient_) throw std::invalid_argument("points have different lengths");
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return lex_compare(a, b) < 0; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);

  RationalMatrix m(points_.size(), ambient_ + 1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    m(i, 0) = 1;
    for (std::size_t j = 0; j < ambient_; ++j) m(i, j + 1) = points_[i][j];
  }
  const auto red = rref(m);
  // Column 0 is all ones, so it is always the first pivot.
  for (std::size_t r = 1; r < red.pivots.size(); ++r) chart_.push_back(red.pivots[r] - 1);

  equations_ = RationalMatrix(0, ambient_);
  RationalVector row(ambient_);
  std::size_t next = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (next < chart_.size() && chart_[next] == j) {
      ++next;
      continue;
    }
    std::fill(row.begin(), row.end(), Rational(0));
    row[j] = 1;
    for (std::size_t r = 1; r < red.pivots.size(); ++r) row[chart_[r - 1]] = -red.matrix(r, j + 1);
    equations_.append_row(row);
    equation_rhs_.push_back(red.matrix(0, j + 1));
  }
}

RationalVector AffineHull::reduce(std::span<const Rational> x) const {
  if (x.size() != ambient_) throw std::invalid_argument("point length does not match the hull");
  RationalVector y;
  y.reserve(chart_.size());
  for (auto j : chart_) y.push_back(x[j]);
  return y;
}

Inequality AffineHull::lift(const Space& space, std::span<const Rational> coeffs, const Rational& bound) const {
  if (coeffs.size() != chart_.size()) throw std::invalid_argument("chart inequality has the wrong length");
  RationalVector full(ambient_);
  for (std::size_t i = 0; i < chart_.size(); ++i) full[chart_[i]] = coeffs[i];
  return Inequality(space, std::move(full), bound);
}

bool AffineHull::contains(std::span<const Rational> x) const {
  if (x.size() != ambient_) return false;
  for (std::size_t r = 0; r < equations_.rows(); ++r) {
    if (dot(equations_.row(r), x) != equation_rhs_[r]) return false;
  }
  return true;
}

namespace {

using IntVec = std::vector<Integer>;
using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVec z;
  Bits zeros;  // processed rows on which the ray vanishes
};

Integer int_dot(const IntVec& a, const IntVec& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

IntVec to_integer_row(std::span<const Rational> r) {
  const Rational s = primitive_scale(r);
  IntVec out;
  out.reserve(r.size());
  for (const auto& x : r) {
    Rational y = x * s;
    out.push_back(y.get_num());
  }
  return out;
}

bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && std::chrono::steady_clock::now() >= *deadline;
}

}  // namespace

std::size_t bell_polytope_dim(const Space& space) {
  const auto d = static_cast<std::size_t>(space.d);
  switch (space.kind) {
    case SpaceKind::correlator: return 4 * (d - 1);
    case SpaceKind::behavior: return 4 * d * (d - 1);
    default: throw std::invalid_argument("no known polytope dimension for " + describe(space));
  }
}

VRep correlator_vrep(int d) { return {Space::correlator(d), projected_generator_vectors(d)}; }

VRep behavior_vrep(int d) { return {Space::behavior(d), all_generator_vectors(Scenario(d))}; }

HRep enumerate_facets(const VRep& vrep, const EnumerateOptions& options) {
  for (const auto& v : vrep.vertices) {
    if (v.size() != vrep.space.dim) throw std::invalid_argument("vertex length does not match " + describe(vrep.space));
  }
  const AffineHull hull(vrep.vertices);
  const std::size_t n = hull.dim();
  std::optional<std::size_t> expected = options.expected_dim;
  if (!expected && vrep.space.kind != SpaceKind::generic) expected = bell_polytope_dim(vrep.space);
  if (expected && n != *expected) {
    throw DegenerateInput("vertices span an affine space of dimension " + std::to_string(n) + ", expected " +
                          std::to_string(*expected));
  }
  if (n == 0) throw DegenerateInput("a single point has no facets");

  const auto& pts = hull.points();
  const std::size_t m = pts.size();
  const std::size_t width = n + 1;
  std::vector<IntVec> rows;
  rows.reserve(m);
  for (const auto& p : pts) {
    RationalVector w{Rational(1)};
    for (const auto& y : hull.reduce(p)) w.push_back(y);
    rows.push_back(to_integer_row(w));
  }

  // Simplicial starting cone on the first affinely independent vertices.
  RowBasis basis(width);
  std::vector<std::size_t> initial;
  std::vector<bool> processed(m, false);
  for (std::size_t i = 0; i < m && initial.size() < width; ++i) {
    RationalVector r(rows[i].begin(), rows[i].end());
    if (basis.insert(r)) {
      initial.push_back(i);
      processed[i] = true;
    }
  }
  RationalMatrix b(width, width);
  for (std::size_t r = 0; r < width; ++r)
    for (std::size_t c = 0; c < width; ++c) b(r, c) = rows[initial[r]][c];
  const auto inv = inverse(b);
  if (!inv) throw std::logic_error("initial simplex is singular");

  std::vector<Ray> rays;
  for (std::size_t c = 0; c < width; ++c) {
    RationalVector col(width);
    for (std::size_t r = 0; r < width; ++r) col[r] = (*inv)(r, c);
    Ray ray{to_integer_row(col), Bits(m)};
    for (std::size_t r = 0; r < width; ++r) {
      if (r != c) ray.zeros.set(initial[r]);
    }
    rays.push_back(std::move(ray));
  }

  bool complete = true;
  std::size_t step = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    if (past(options.deadline)) {
      complete = false;
      break;
    }
    ++step;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = int_dot(rows[i], rays[r].z);
      const int s = sgn(val[r]);
      if (s > 0) plus.push_back(r);
      else if (s < 0) minus.push_back(r);
      else rays[r].zeros.set(i);
    }
    processed[i] = true;
    if (minus.empty()) continue;

    std::vector<Ray> created;
    std::size_t pairs = 0;
    for (auto p : plus) {
      for (auto q : minus) {
        if ((++pairs & 1023u) == 0 && past(options.deadline)) {
          complete = false;
          break;
        }
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 1 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{IntVec(width), std::move(common)};
        for (std::size_t c = 0; c < width; ++c) fresh.z[c] = val[p] * rays[q].z[c] - val[q] * rays[p].z[c];
        make_primitive(fresh.z);
        fresh.zeros.set(i);
        created.push_back(std::move(fresh));
      }
      if (!complete) break;
    }
    if (!complete) {
      // Row i was only partly inserted; forget it so that the surviving rays
      // are judged against every vertex below.
      processed[i] = false;
      for (auto& r : rays) r.zeros.reset(i);
      break;
    }
    std::vector<Ray> next;
    next.reserve(rays.size() - minus.size() + created.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(val[r]) >= 0) next.push_back(std::move(rays[r]));
    }
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
    if (options.progress) {
      options.progress("dd: inserted " + std::to_string(step) + "/" + std::to_string(m - width) +
                       " vertices, " + std::to_string(rays.size()) + " rays");
    }
  }

  HRep out;
  out.space = vrep.space;
  out.dim = n;
  out.vertex_count = m;
  out.equations = hull.equations();
  out.equation_rhs = hull.equation_rhs();
  out.complete = complete;

  const AffineReducer generic_reducer = vrep.space.kind == SpaceKind::generic
                                            ? AffineReducer(hull.equations(), hull.equation_rhs())
                                            : AffineReducer();
  for (const auto& ray : rays) {
    if (!complete) {
      // Keep a ray only if it is valid on every vertex and has n affinely
      // independent saturating vertices.
      RowBasis sat(width);
      bool valid = true;
      for (std::size_t i = 0; i < m && valid; ++i) {
        const int s = sgn(int_dot(rows[i], ray.z));
        if (s < 0) valid = false;
        else if (s == 0) sat.insert(RationalVector(rows[i].begin(), rows[i].end()));
      }
      if (!valid || sat.rank() != n) continue;
    }
    // z0 + z'.y >= 0  <=>  -z'.y <= z0
    RationalVector coeffs;
    for (std::size_t c = 1; c < width; ++c) coeffs.emplace_back(-ray.z[c]);
    const Inequality lifted = hull.lift(vrep.space, coeffs, Rational(ray.z[0]));
    out.facets.push_back(vrep.space.kind == SpaceKind::generic ? canonicalize(lifted, generic_reducer)
                                                               : canonicalize(lifted));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const Inequality& a, const Inequality& b) { return compare(a, b) < 0; });
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
  return out;
}

SaturationReport saturation_count(const Inequality& ineq, std::span<const RationalVector> vertices) {
  SaturationReport rep;
  if (vertices.empty()) return rep;
  RowBasis basis(vertices.front().size() + 1);
  for (const auto& v : vertices) {
    const Rational value = eval(ineq, v);
    const int c = cmp(value, ineq.bound);
    if (c > 0) rep.valid = false;
    if (c == 0) {
      ++rep.count;
      RationalVector h{Rational(1)};
      h.insert(h.end(), v.begin(), v.end());
      basis.insert(h);
    }
  }
  rep.rank = basis.rank();
  rep.supporting = rep.valid && rep.count > 0;
  return rep;
}

const char* to_string(Triviality t) { return t == Triviality::trivial ? "trivial" : "nontrivial"; }

Triviality classify_trivial(const Inequality& ineq) {
  return nosignaling_max(ineq) <= ineq.bound ? Triviality::trivial : Triviality::nontrivial;
}

std::optional<Inequality> separating_facet(const AffineHull& hull, const Space& space,
                                           std::span<const Rational> point) {
  if (!hull.contains(point)) throw std::invalid_argument("point does not lie on the affine hull of the polytope");
  const std::size_t n = hull.dim();
  const auto& pts = hull.points();
  RationalVector centroid(n);
  for (const auto& p : pts) {
    const auto y = hull.reduce(p);
    for (std::size_t i = 0; i < n; ++i) centroid[i] += y[i];
  }
  for (auto& c : centroid) c /= static_cast<long>(pts.size());

  LPProblem lp;
  const auto y = hull.reduce(point);
  lp.objective = y;
  lp.objective.push_back(-1);
  lp.ineq_rows = RationalMatrix(0, n + 1);
  for (const auto& p : pts) {
    RationalVector row = hull.reduce(p);
    row.push_back(-1);
    lp.ineq_rows.append_row(row);
    lp.ineq_rhs.push_back(0);
  }
  RationalVector norm = centroid;
  norm.push_back(-1);
  lp.eq_rows = RationalMatrix(0, n + 1);
  lp.eq_rows.append_row(norm);
  lp.eq_rhs.push_back(-1);
  lp.nonneg.assign(n + 1, false);

  const auto res = lp_max(lp);
  if (res.status != LPStatus::optimal) {
    throw std::logic_error(std::string("polar separation LP is ") + to_string(res.status));
  }
  if (sgn(res.optimum) <= 0) return std::nullopt;
  const std::span<const Rational> a(res.primal.data(), n);
  const Inequality lifted = hull.lift(space, a, res.primal[n]);
  if (space.kind == SpaceKind::generic) {
    return canonicalize(lifted, AffineReducer(hull.equations(), hull.equation_rhs()));
  }
  return canonicalize(lifted);
}

}  // namespace bellpoly
