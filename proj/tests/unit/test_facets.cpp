#include "bellpoly/cglmp.hpp"
#include "bellpoly/correlators.hpp"
#include "bellpoly/facets.hpp"
#include "bellpoly/membership.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <set>

using namespace bellpoly;
using namespace bellpoly::testing;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<RationalVector> cube(std::size_t n) {
  std::vector<RationalVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1u;
    out.push_back(v);
  }
  return out;
}

// Brute-force facets in the hull chart, lifted and canonicalized like the
// enumerator's output.
std::vector<Inequality> oracle_facets(const VRep& vrep) {
  const AffineHull hull(vrep.vertices);
  std::vector<RationalVector> reduced;
  for (const auto& p : hull.points()) reduced.push_back(hull.reduce(p));
  const AffineReducer reducer(hull.equations(), hull.equation_rhs());
  std::vector<Inequality> out;
  for (const auto& z : brute_force_facets(reduced)) {
    const std::span<const Rational> a(z.data(), z.size() - 1);
    const auto lifted = hull.lift(vrep.space, a, z.back());
    out.push_back(vrep.space.kind == SpaceKind::generic ? canonicalize(lifted, reducer) : canonicalize(lifted));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_sound(const HRep& h, const std::vector<RationalVector>& vertices) {
  for (const auto& f : h.facets) {
    const auto sat = saturation_count(f, vertices);
    REQUIRE(sat.valid);
    REQUIRE(sat.rank == h.dim);
  }
}

}  // namespace

TEST_CASE("canonicalize") {
  const Space plane = Space::generic(2);
  const Inequality in(plane, {frac(2, 3), frac(4, 3)}, 2);
  const auto c = canonicalize(in);
  CHECK(c.coeffs == vec({1, 2}));
  CHECK(c.bound == 3);
  CHECK(canonicalize(c) == c);
  // Orientation is never flipped.
  const auto neg = canonicalize(Inequality(plane, vec({-2, 0}), 0));
  CHECK(neg.coeffs == vec({-1, 0}));
  CHECK(neg.bound == 0);
  CHECK_THROWS_AS(canonicalize(Inequality::zero(plane)), std::invalid_argument);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Inequality r(Space::correlator(3), RationalVector(12), random_rational(rng));
    for (auto& x : r.coeffs) x = random_rational(rng);
    if (r.is_zero()) continue;
    const auto once = canonicalize(r);
    CHECK(canonicalize(once) == once);
    // Adding multiples of the block normalizations changes nothing.
    Inequality shifted = r;
    for (int block = 0; block < 4; ++block) {
      const Rational y = random_rational(rng);
      for (int n = 0; n < 3; ++n) shifted.coeffs[static_cast<std::size_t>(block * 3 + n)] += y;
      shifted.bound += y;
    }
    CHECK(canonicalize(shifted) == once);
    // Positive scaling changes nothing either.
    Inequality scaled = r;
    for (auto& x : scaled.coeffs) x *= frac(7, 3);
    scaled.bound *= frac(7, 3);
    CHECK(canonicalize(scaled) == once);
  }
  // A functional constant on the hull cannot be canonicalized.
  Inequality constant = Inequality::zero(Space::correlator(2));
  constant.coeffs[0] = constant.coeffs[1] = 1;
  CHECK_THROWS_AS(canonicalize(constant), std::invalid_argument);
}

TEST_CASE("affine hull chart") {
  const std::vector<RationalVector> pts{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  const AffineHull hull(pts);
  CHECK(hull.dim() == 2);
  CHECK(hull.equations().rows() == 1);
  CHECK(hull.contains(vec({1, 1, -1})));
  CHECK_FALSE(hull.contains(vec({1, 1, 1})));
  CHECK_THROWS_AS(AffineHull({}), std::invalid_argument);
}

TEST_CASE("small generic polytopes") {
  const auto square = enumerate_facets({Space::generic(2), cube(2)});
  CHECK(square.facets.size() == 4);
  CHECK(square.complete);
  const auto c3 = enumerate_facets({Space::generic(3), cube(3)});
  CHECK(c3.facets.size() == 6);
  const auto c4 = enumerate_facets({Space::generic(4), cube(4)});
  CHECK(c4.facets.size() == 8);
  check_sound(c4, cube(4));

  // A square embedded in a plane of Q^3.
  std::vector<RationalVector> tilted;
  for (const auto& p : cube(2)) tilted.push_back({p[0], p[1], p[0] + p[1] + 1});
  const auto t = enumerate_facets({Space::generic(3), tilted});
  CHECK(t.dim == 2);
  CHECK(t.facets.size() == 4);
  CHECK(t.equations.rows() == 1);

  // Interior points are ignored.
  auto with_center = cube(3);
  with_center.push_back({frac(1, 2), frac(1, 2), frac(1, 2)});
  CHECK(enumerate_facets({Space::generic(3), with_center}).facets.size() == 6);

  EnumerateOptions strict;
  strict.expected_dim = 3;
  CHECK_THROWS_AS(enumerate_facets({Space::generic(3), tilted}, strict), DegenerateInput);
  CHECK_THROWS_AS(enumerate_facets({Space::generic(2), {vec({1, 1})}}), DegenerateInput);
}

TEST_CASE("random polytopes agree with the brute-force oracle") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<RationalVector> pts;
      for (std::size_t i = 0; i < n + 5; ++i) {
        RationalVector p(n);
        for (auto& x : p) x = coord(rng);
        pts.push_back(p);
      }
      const VRep v{Space::generic(n), pts};
      if (AffineHull(pts).dim() != n) continue;
      const auto h = enumerate_facets(v);
      CHECK(h.facets == oracle_facets(v));
      check_sound(h, pts);
    }
  }
}

TEST_CASE("d=2 correlator polytope") {
  const auto v = correlator_vrep(2);
  const auto h = enumerate_facets(v);
  CHECK(h.dim == 4);
  CHECK(h.facets.size() == 16);
  CHECK(h.facets == oracle_facets(v));
  check_sound(h, v.vertices);
  std::size_t trivial = 0;
  for (const auto& f : h.facets) trivial += classify_trivial(f) == Triviality::trivial ? 1 : 0;
  CHECK(trivial == 8);
}

TEST_CASE("d=2 behavior polytope") {
  const auto v = behavior_vrep(2);
  const auto h = enumerate_facets(v);
  CHECK(h.dim == 8);
  CHECK(h.facets.size() == 24);
  CHECK(h.facets == oracle_facets(v));
  check_sound(h, v.vertices);
}

TEST_CASE("d=3 and d=4 correlator polytopes") {
  const auto v3 = correlator_vrep(3);
  const auto h3 = enumerate_facets(v3);
  CHECK(h3.dim == 8);
  CHECK(h3.facets.size() == 66);
  check_sound(h3, v3.vertices);

  const auto v4 = correlator_vrep(4);
  const auto h4 = enumerate_facets(v4);
  CHECK(h4.dim == 12);
  CHECK(h4.facets.size() == 216);
  check_sound(h4, v4.vertices);

  // Completeness: a violated facet found by polar separation is always listed.
  std::mt19937 rng(99);
  for (const auto* pair : {&v3, &v4}) {
    const auto& v = *pair;
    const auto& h = pair == &v3 ? h3 : h4;
    const int d = v.space.d;
    const AffineHull hull(v.vertices);
    std::set<RationalVector> listed;
    for (const auto& f : h.facets) listed.insert(f.coeffs);
    for (int trial = 0; trial < 15; ++trial) {
      // Mix a random signaling-free point per block with the uniform point.
      CorrVector c(d);
      for (int block = 0; block < 4; ++block) {
        const auto n = static_cast<std::size_t>(block * d) + rng() % static_cast<unsigned>(d);
        c.coords()[n] = 1;
      }
      const auto sep = separating_facet(hull, v.space, c.coords());
      bool outside = false;
      for (const auto& f : h.facets) outside = outside || eval(f, c.coords()) > f.bound;
      CHECK(sep.has_value() == outside);
      if (sep) CHECK(listed.count(sep->coeffs) == 1);
    }
  }
}

TEST_CASE("membership agrees with the facet description") {
  std::mt19937 rng(42);
  for (int d = 2; d <= 3; ++d) {
    const auto h = enumerate_facets(correlator_vrep(d));
    for (int trial = 0; trial < 12; ++trial) {
      // Random rational point on the simplex of each block.
      CorrVector c(d);
      for (int block = 0; block < 4; ++block) {
        Rational total = 0;
        std::vector<Rational> w;
        for (int n = 0; n < d; ++n) {
          w.emplace_back(static_cast<long>(rng() % 5));
          total += w.back();
        }
        if (total == 0) {
          w[0] = 1;
          total = 1;
        }
        for (int n = 0; n < d; ++n) c.coords()[static_cast<std::size_t>(block * d + n)] = w[static_cast<std::size_t>(n)] / total;
      }
      bool inside = true;
      for (const auto& f : h.facets) inside = inside && eval(f, c.coords()) <= f.bound;
      CHECK(corr_local_decompose(c).local == inside);
    }
  }
}

TEST_CASE("behavior polytope at d=3") {
  const auto v = behavior_vrep(3);
  const auto h = enumerate_facets(v);
  CHECK(h.dim == 24);
  CHECK(h.facets.size() == 1116);
  check_sound(h, v.vertices);
}

TEST_CASE("expired deadline keeps only proven facets") {
  EnumerateOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const auto v = correlator_vrep(3);
  const auto partial = enumerate_facets(v, opts);
  CHECK_FALSE(partial.complete);
  const auto full = enumerate_facets(v);
  for (const auto& f : partial.facets) {
    CHECK(std::find(full.facets.begin(), full.facets.end(), f) != full.facets.end());
  }
  check_sound(partial, v.vertices);
}

TEST_CASE("saturation counts") {
  const auto corr2 = projected_generator_vectors(2);
  const auto chsh = saturation_count(chsh_inequality(), corr2);
  CHECK(chsh.count == 4);
  CHECK(chsh.rank == 4);
  CHECK(chsh.supporting);

  const auto gens3 = all_generator_vectors(Scenario(3));
  const auto cg = saturation_count(cglmp_inequality(3), gens3);
  CHECK(cg.rank == 24);
  CHECK(cg.count == saturating_generators(3).size());

  const auto sq = saturation_count(Inequality(Space::generic(2), vec({1, 0}), 1), cube(2));
  CHECK(sq.count == 2);
  CHECK(sq.rank == 2);

  const auto bad = saturation_count(Inequality(Space::generic(2), vec({1, 0}), 0), cube(2));
  CHECK_FALSE(bad.valid);
  const auto loose = saturation_count(Inequality(Space::generic(2), vec({1, 0}), 5), cube(2));
  CHECK(loose.valid);
  CHECK_FALSE(loose.supporting);
}

TEST_CASE("trivial versus non-trivial") {
  // <A1B1> <= 1 is the d=2 positivity facet P(A1 - B1 = 1) >= 0.
  Inequality corr11 = Inequality::zero(Space::correlator(2));
  corr11.coeffs[corr_index(2, 1, 1, 0)] = 1;
  corr11.coeffs[corr_index(2, 1, 1, 1)] = -1;
  corr11.bound = 1;
  CHECK(nosignaling_max(corr11) == 1);
  CHECK(classify_trivial(corr11) == Triviality::trivial);
  CHECK(nosignaling_max(chsh_inequality()) == 4);
  CHECK(classify_trivial(chsh_inequality()) == Triviality::nontrivial);
  CHECK(classify_trivial(cglmp_corr_inequality(3)) == Triviality::nontrivial);
  CHECK(classify_trivial(cglmp_inequality(3)) == Triviality::nontrivial);
}
