#include "bellpoly/membership.hpp"

#include "bellpoly/cglmp.hpp"
#include "bellpoly/facets.hpp"
#include "bellpoly/lp.hpp"
#include "bellpoly/symmetry.hpp"

#include <stdexcept>

namespace bellpoly {

std::vector<RationalVector> local_vertices(const Space& space) {
  switch (space.kind) {
    case SpaceKind::behavior: return all_generator_vectors(Scenario(space.d));
    case SpaceKind::correlator: return projected_generator_vectors(space.d);
    default: throw std::invalid_argument("no local polytope for " + describe(space));
  }
}

Rational local_max(const Inequality& ineq) {
  const auto verts = local_vertices(ineq.space);
  Rational best = eval(ineq, verts.front());
  for (std::size_t i = 1; i < verts.size(); ++i) {
    Rational v = eval(ineq, verts[i]);
    if (v > best) best = std::move(v);
  }
  return best;
}

NosignalingOptimum nosignaling_optimum(const Inequality& ineq) {
  const Inequality target = ineq.space.kind == SpaceKind::correlator ? lift(ineq) : ineq;
  if (target.space.kind != SpaceKind::behavior) {
    throw std::invalid_argument("no no-signaling polytope for " + describe(ineq.space));
  }
  const Scenario sc(target.space.d);
  const auto sys = constraint_matrix(sc);
  LPProblem lp;
  lp.objective = target.coeffs;
  lp.eq_rows = sys.rows;
  lp.eq_rhs = sys.rhs;
  lp.ineq_rows = RationalMatrix(0, sc.behavior_dim());
  lp.nonneg.assign(sc.behavior_dim(), true);
  auto res = lp_max(lp);
  if (res.status != LPStatus::optimal) {
    throw std::logic_error(std::string("no-signaling LP is ") + to_string(res.status));
  }
  return {res.optimum, Behavior(sc.d(), std::move(res.primal))};
}

Rational nosignaling_max(const Inequality& ineq) { return nosignaling_optimum(ineq).value; }

std::vector<CatalogEntry> catalog(const Space& space) {
  if (space.kind == SpaceKind::generic) throw std::invalid_argument("catalog: not a Bell space");
  std::vector<CatalogEntry> out;
  const int d = space.d;
  Inequality positivity = Inequality::zero(space);
  positivity.coeffs[0] = -1;
  if (space.kind == SpaceKind::correlator) {
    if (d == 2) out.push_back({"CHSH", chsh_inequality()});
    out.push_back({"CGLMP", cglmp_corr_inequality(d)});
  } else {
    if (d == 2) out.push_back({"CHSH", lift(chsh_inequality())});
    out.push_back({"CGLMP", cglmp_inequality(d)});
  }
  out.push_back({"positivity", positivity});
  return out;
}

namespace {

std::optional<CatalogMatch> match_catalog(const Inequality& cert, std::span<const Rational> point) {
  for (const auto& entry : catalog(cert.space)) {
    if (const auto op = find_mapping(entry.ineq, cert)) {
      Inequality image = apply(*op, entry.ineq);
      Rational value = eval(image, point);
      return CatalogMatch{entry.name, std::move(image), std::move(value)};
    }
  }
  return std::nullopt;
}

Verdict decide(const Space& space, const std::vector<RationalVector>& verts, const std::vector<std::string>& labels,
               std::span<const Rational> point, bool use_catalog) {
  const std::size_t dim = space.dim;
  const std::size_t n = verts.size();
  LPProblem lp;
  lp.objective = RationalVector(n);
  lp.eq_rows = RationalMatrix(dim + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < dim; ++i) lp.eq_rows(i, j) = verts[j][i];
    lp.eq_rows(dim, j) = 1;
  }
  lp.eq_rhs.assign(point.begin(), point.end());
  lp.eq_rhs.push_back(1);
  lp.ineq_rows = RationalMatrix(0, n);
  lp.nonneg.assign(n, true);
  const auto res = lp_max(lp);

  Verdict out;
  if (res.status == LPStatus::optimal) {
    out.local = true;
    RationalVector sum(dim);
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& w = res.primal[j];
      if (sgn(w) < 0) throw std::logic_error("negative decomposition weight");
      if (sgn(w) == 0) continue;
      out.weights.push_back({labels[j], w});
      total += w;
      for (std::size_t i = 0; i < dim; ++i) sum[i] += w * verts[j][i];
    }
    if (total != 1 || !std::equal(sum.begin(), sum.end(), point.begin())) {
      throw std::logic_error("decomposition does not reproduce the point");
    }
    return out;
  }
  if (res.status != LPStatus::infeasible) throw std::logic_error("membership LP is unbounded");
  if (!verify_farkas(lp, res.certificate)) throw std::logic_error("Farkas certificate failed verification");

  // y_P . v + y_0 >= 0 on every vertex and y_P . p + y_0 < 0, so
  // -y_P . x <= y_0 separates p from the polytope.
  RationalVector coeffs(dim);
  for (std::size_t i = 0; i < dim; ++i) coeffs[i] = -res.certificate[i];
  Inequality farkas(space, std::move(coeffs), 0);
  farkas.bound = local_max(farkas);
  farkas = canonicalize(farkas);

  const AffineHull hull(verts);
  auto facet = separating_facet(hull, space, point);
  if (!facet) throw std::logic_error("polar separation found no violated facet for an infeasible point");

  for (const Inequality* ineq : {&farkas, &*facet}) {
    const auto sat = saturation_count(*ineq, verts);
    if (!sat.supporting || eval(*ineq, point) <= ineq->bound) {
      throw std::logic_error("separating inequality failed re-verification");
    }
  }
  if (saturation_count(*facet, verts).rank != hull.dim()) throw std::logic_error("separating inequality is not a facet");

  out.local = false;
  out.violation = eval(*facet, point) - facet->bound;
  if (use_catalog) {
    out.catalog_checked = true;
    out.match = match_catalog(*facet, point);
  }
  out.certificate = std::move(facet);
  out.farkas = std::move(farkas);
  return out;
}

}  // namespace

Verdict local_decompose(const Behavior& p) {
  if (!is_normalized(p)) throw std::invalid_argument("behavior is not normalized");
  if (!is_nosignaling(p)) throw std::invalid_argument("behavior violates no-signaling");
  if (!is_probability(p)) throw std::invalid_argument("behavior has negative entries");
  const Scenario sc(p.d());
  std::vector<std::string> labels;
  for (const auto& l : all_strategies(sc)) labels.push_back(to_string(l));
  return decide(Space::behavior(p.d()), all_generator_vectors(sc), labels, p.coords(), p.d() <= 3);
}

Verdict corr_local_decompose(const CorrVector& c) {
  if (!is_corr_normalized(c)) throw std::invalid_argument("correlator blocks do not sum to 1");
  if (!is_corr_probability(c)) throw std::invalid_argument("correlator vector has negative entries");
  const int d = c.d();
  const auto verts = projected_generator_vectors(d);
  std::vector<std::string> labels;
  for (const auto& v : verts) {
    const auto lab = corr_vertex_label(CorrVector(d, v));
    labels.push_back(std::to_string(lab[0]) + "," + std::to_string(lab[1]) + "," + std::to_string(lab[2]) + "," +
                     std::to_string(lab[3]));
  }
  return decide(Space::correlator(d), verts, labels, c.coords(), d <= 4);
}

}  // namespace bellpoly
