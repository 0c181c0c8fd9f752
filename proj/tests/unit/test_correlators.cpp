#include "bellpoly/cglmp.hpp"
#include "bellpoly/correlators.hpp"
#include "bellpoly/linalg.hpp"
#include "bellpoly/membership.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <set>

using namespace bellpoly;
using namespace bellpoly::testing;

namespace {

int mod(int x, int d) { return ((x % d) + d) % d; }

Behavior random_local_behavior(std::mt19937& rng, int d, std::size_t terms) {
  const auto gens = all_generator_vectors(Scenario(d));
  return Behavior(d, mix(gens, random_mixture(rng, gens.size(), terms)));
}

}  // namespace

TEST_CASE("projection of simple behaviors") {
  for (int d = 2; d <= 5; ++d) {
    const auto c = project(uniform_behavior(Scenario(d)));
    for (const auto& x : c.coords()) CHECK(x == frac(1, d));
  }
  const auto c = project(generator(Scenario(3), {0, 0, 0, 0}));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int n = 0; n < 3; ++n) CHECK(c.at(a, b, n) == (n == 0 ? 1 : 0));
  CHECK_THROWS_AS(CorrVector(3, RationalVector(11)), std::invalid_argument);
}

TEST_CASE("projected generators") {
  for (int d = 2; d <= 5; ++d) {
    const auto gens = projected_generators(d);
    CHECK(gens.size() == static_cast<std::size_t>(d * d * d));
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) CHECK(lex_compare(gens[i].coords(), gens[i + 1].coords()) < 0);
    for (const auto& g : gens) {
      CHECK(is_corr_probability(g));
      const auto label = corr_vertex_label(g);
      CHECK(mod(label[0] - label[1] - label[2] + label[3], d) == 0);
    }
    // Every strategy lands on its own differences.
    for (const auto& l : all_strategies(Scenario(d))) {
      const auto label = corr_vertex_label(projected_generator(d, l));
      CHECK(label[0] == mod(l.a1 - l.b1, d));
      CHECK(label[3] == mod(l.a2 - l.b2, d));
      CHECK(project(generator(Scenario(d), l)) == projected_generator(d, l));
    }
  }
  CHECK_THROWS_AS(corr_vertex_label(uniform_corr(3)), std::invalid_argument);
}

TEST_CASE("correlator polytope dimension") {
  for (int d = 2; d <= 4; ++d) {
    // Oracle: dense rank of differences from the first vertex.
    const auto v = projected_generator_vectors(d);
    RationalMatrix diff(0, v.front().size());
    for (std::size_t i = 1; i < v.size(); ++i) {
      RationalVector row(v[i].size());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = v[i][j] - v[0][j];
      diff.append_row(row);
    }
    CHECK(corr_affine_dim(d) == rank(diff));
    CHECK(corr_affine_dim(d) == static_cast<std::size_t>(4 * (d - 1)));
  }
}

TEST_CASE("CHSH correlators") {
  const auto zero = chsh_correlators(uniform_behavior(Scenario(2)));
  for (const auto& x : zero) CHECK(x == 0);
  const auto g = generator(Scenario(2), {0, 0, 0, 0});
  const auto e = chsh_correlators(g);
  for (const auto& x : e) CHECK(x == 1);
  CHECK(e[0] + e[1] + e[2] - e[3] == 2);
  CHECK(eval(chsh_inequality(), project(g).coords()) == 2);
  CHECK_THROWS_AS(chsh_correlators(uniform_behavior(Scenario(3))), std::invalid_argument);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_local_behavior(rng, 2, 5);
    const auto c = project(p);
    const auto corr = chsh_correlators(p);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const auto i = static_cast<std::size_t>((a - 1) * 2 + (b - 1));
        CHECK(corr[i] == c.at(a, b, 0) - c.at(a, b, 1));
      }
  }
}

TEST_CASE("CGLMP in correlator coordinates") {
  for (int d = 2; d <= 6; ++d) {
    const auto corr = cglmp_corr_inequality(d);
    const auto lifted = lift(corr);
    const auto direct = cglmp_inequality(d);
    CHECK(lifted.bound == 2);
    for (const auto& l : all_strategies(Scenario(d))) {
      const auto g = generator(Scenario(d), l);
      REQUIRE(eval(corr, project(g).coords()) == eval_on_generator(l, d));
      REQUIRE(eval(lifted, g.coords()) == eval(direct, g.coords()));
    }
    CHECK(eval(corr, uniform_corr(d).coords()) == 0);
  }
  // Lifting reproduces the full value histogram over all strategies.
  const auto rep = verify_condition1(4);
  std::map<Rational, std::size_t> hist;
  const auto lifted = lift(cglmp_corr_inequality(4));
  for (const auto& g : all_generator_vectors(Scenario(4))) ++hist[eval(lifted, g)];
  CHECK(hist == rep.histogram);
}

TEST_CASE("lift is the pullback of the projection") {
  std::mt19937 rng(5);
  for (int d = 2; d <= 4; ++d) {
    CHECK(lift(Inequality::zero(Space::correlator(d))).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
      Inequality ineq = Inequality::zero(Space::correlator(d));
      for (auto& c : ineq.coeffs) c = random_rational(rng);
      ineq.bound = random_rational(rng);
      Behavior p(d);
      for (auto& x : p.coords()) x = random_rational(rng);
      const auto l = lift(ineq);
      CHECK(l.bound == ineq.bound);
      CHECK(eval(l, p.coords()) == eval(ineq, project(p).coords()));
    }
  }
  CHECK_THROWS_AS(lift(cglmp_inequality(3)), std::invalid_argument);
}

TEST_CASE("projection is linear and preserves block sums") {
  std::mt19937 rng(17);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_local_behavior(rng, d, 4);
      const auto q = random_local_behavior(rng, d, 4);
      const Rational alpha = frac(static_cast<long>(rng() % 7), 7);
      Behavior m(d);
      for (std::size_t i = 0; i < m.coords().size(); ++i)
        m.coords()[i] = alpha * p.coords()[i] + (1 - alpha) * q.coords()[i];
      const auto cp = project(p);
      const auto cq = project(q);
      const auto cm = project(m);
      for (std::size_t i = 0; i < cm.coords().size(); ++i)
        CHECK(cm.coords()[i] == alpha * cp.coords()[i] + (1 - alpha) * cq.coords()[i]);
      CHECK(is_corr_probability(cm));
    }
  }
}

TEST_CASE("projected local behaviors stay local") {
  std::mt19937 rng(23);
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto c = project(random_local_behavior(rng, d, 6));
      const auto verdict = corr_local_decompose(c);
      CHECK(verdict.local);
    }
  }
}
