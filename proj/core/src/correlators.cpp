#include "bellpoly/correlators.hpp"

#include "bellpoly/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bellpoly {

namespace {

int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

CorrVector::CorrVector(int d) : d_(d), coords_(static_cast<std::size_t>(4 * d)) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
}

CorrVector::CorrVector(int d, RationalVector coords) : d_(d), coords_(std::move(coords)) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
  if (coords_.size() != static_cast<std::size_t>(4 * d)) {
    throw std::invalid_argument("correlator vector for d=" + std::to_string(d) + " needs " +
                                std::to_string(4 * d) + " coordinates, got " + std::to_string(coords_.size()));
  }
}

CorrVector project(const Behavior& p) {
  const int d = p.d();
  CorrVector c(d);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int n = 0; n < d; ++n)
        for (int j = 0; j < d; ++j) c.at(a, b, n) += p.at(a, b, mod(n + j, d), j);
  return c;
}

CorrVector projected_generator(int d, const DeterministicStrategy& l) {
  check_strategy(d, l);
  CorrVector c(d);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) c.at(a, b, mod(l.alice(a) - l.bob(b), d)) = 1;
  return c;
}

std::vector<RationalVector> projected_generator_vectors(int d) {
  const Scenario sc(d);
  std::set<RationalVector> distinct;
  for (const auto& l : all_strategies(sc)) distinct.insert(projected_generator(d, l).coords());
  if (distinct.size() != static_cast<std::size_t>(d * d * d)) {
    throw std::logic_error("projected generator count " + std::to_string(distinct.size()) + " != d^3");
  }
  return {distinct.begin(), distinct.end()};
}

std::vector<CorrVector> projected_generators(int d) {
  std::vector<CorrVector> out;
  for (auto& v : projected_generator_vectors(d)) out.emplace_back(d, std::move(v));
  return out;
}

std::array<int, 4> corr_vertex_label(const CorrVector& c) {
  const int d = c.d();
  std::array<int, 4> label{};
  for (int block = 0; block < 4; ++block) {
    int found = -1;
    for (int n = 0; n < d; ++n) {
      const Rational& x = c.coords()[static_cast<std::size_t>(block * d + n)];
      if (x == 1 && found < 0) {
        found = n;
      } else if (sgn(x) != 0) {
        throw std::invalid_argument("not a projected generator");
      }
    }
    if (found < 0) throw std::invalid_argument("not a projected generator");
    label[static_cast<std::size_t>(block)] = found;
  }
  if (mod(label[0] - label[1] - label[2] + label[3], d) != 0) {
    throw std::invalid_argument("differences are not realizable by a deterministic strategy");
  }
  return label;
}

std::size_t corr_affine_dim(int d) {
  const auto verts = projected_generator_vectors(d);
  return affine_dim(verts);
}

CorrVector uniform_corr(int d) { return CorrVector(d, RationalVector(static_cast<std::size_t>(4 * d), frac(1, d))); }

bool is_corr_normalized(const CorrVector& c) {
  const int d = c.d();
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      Rational s = 0;
      for (int n = 0; n < d; ++n) s += c.at(a, b, n);
      if (s != 1) return false;
    }
  return true;
}

bool is_corr_probability(const CorrVector& c) {
  for (const auto& x : c.coords()) {
    if (sgn(x) < 0) return false;
  }
  return is_corr_normalized(c);
}

std::array<Rational, 4> chsh_correlators(const Behavior& p) {
  if (p.d() != 2) throw std::invalid_argument("CHSH correlators need d=2, got d=" + std::to_string(p.d()));
  std::array<Rational, 4> out;
  std::size_t i = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      out[i++] = p.at(a, b, 0, 0) + p.at(a, b, 1, 1) - p.at(a, b, 0, 1) - p.at(a, b, 1, 0);
  return out;
}

Inequality chsh_inequality() {
  RationalVector c{1, -1, 1, -1, 1, -1, -1, 1};
  return Inequality(Space::correlator(2), std::move(c), 2);
}

Inequality cglmp_corr_inequality(int d) {
  Inequality ineq = Inequality::zero(Space::correlator(d));
  auto add = [&](int a, int b, int n, const Rational& w) { ineq.coeffs[corr_index(d, a, b, mod(n, d))] += w; };
  for (int k = 0; k <= d / 2 - 1; ++k) {
    const Rational c = 1 - frac(2 * k, d - 1);
    add(1, 1, k, c);
    add(1, 1, -k - 1, -c);
    add(1, 2, -k, c);
    add(1, 2, k + 1, -c);
    add(2, 1, -k - 1, c);
    add(2, 1, k, -c);
    add(2, 2, k, c);
    add(2, 2, -k - 1, -c);
  }
  ineq.bound = 2;
  return ineq;
}

Inequality lift(const Inequality& ineq) {
  if (ineq.space.kind != SpaceKind::correlator) {
    throw std::invalid_argument("lift expects a correlator-space inequality, got " + describe(ineq.space));
  }
  const int d = ineq.space.d;
  Inequality out = Inequality::zero(Space::behavior(d));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int k = 0; k < d; ++k)
        for (int s = 0; s < d; ++s)
          out.coeffs[behavior_index(d, a, b, k, s)] = ineq.coeffs[corr_index(d, a, b, mod(k - s, d))];
  out.bound = ineq.bound;
  return out;
}

}  // namespace bellpoly
