#pragma once

// Brute-force oracles that share no code path with the simplex solver or the
// double-description enumerator. Only rref() from the linear algebra layer is
// used, to solve square subsystems.

#include "bellpoly/linalg.hpp"
#include "bellpoly/matrix.hpp"
#include "bellpoly/rational.hpp"
#include "bellpoly/scenario.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace bellpoly::testing {

// Textbook CGLMP expression evaluated on preassigned outcomes with indicator
// functions. Shares nothing with the library's coefficient construction.
inline Rational textbook_cglmp(const DeterministicStrategy& l, int d) {
  auto is = [d](int x, int y) { return ((x - y) % d + d) % d == 0 ? 1 : 0; };
  Rational total = 0;
  for (int k = 0; k < d / 2; ++k) {
    const Rational c = 1 - frac(2 * k, d - 1);
    const int plus = is(l.a1, l.b1 + k) + is(l.b1, l.a2 + k + 1) + is(l.a2, l.b2 + k) + is(l.b2, l.a1 + k);
    const int minus = is(l.a1, l.b1 - k - 1) + is(l.b1, l.a2 - k) + is(l.a2, l.b2 - k - 1) + is(l.b2, l.a1 - k - 1);
    total += c * (plus - minus);
  }
  return total;
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unique solution of M x = rhs, if M has full column rank and the system is consistent.
inline std::optional<RationalVector> solve_unique(const RationalMatrix& m, const RationalVector& rhs) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  if (red.pivots.size() != m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = red.matrix(r, m.cols());
  return x;
}

// Vertices of {x : E x = e, x >= 0} via basic solutions: pick which coordinates
// may be nonzero, solve, keep nonnegative unique solutions.
inline std::vector<RationalVector> standard_form_vertices(const RationalMatrix& eq, const RationalVector& rhs) {
  const std::size_t n = eq.cols();
  const std::size_t r = rank(eq);
  std::vector<RationalVector> out;
  for_each_subset(n, r, [&](const std::vector<std::size_t>& support) {
    RationalMatrix sub(eq.rows(), support.size());
    for (std::size_t i = 0; i < eq.rows(); ++i)
      for (std::size_t j = 0; j < support.size(); ++j) sub(i, j) = eq(i, support[j]);
    const auto sol = solve_unique(sub, rhs);
    if (!sol) return;
    RationalVector x(n);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (sgn((*sol)[j]) < 0) return;
      x[support[j]] = (*sol)[j];
    }
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  });
  return out;
}

// Vertices of {x : A x <= b} in Q^n by intersecting every n-subset of facets.
inline std::vector<RationalVector> inequality_vertices(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.cols();
  std::vector<RationalVector> out;
  for_each_subset(a.rows(), n, [&](const std::vector<std::size_t>& rows) {
    RationalMatrix sub(n, n);
    RationalVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = a(rows[i], j);
      rhs[i] = b[rows[i]];
    }
    const auto sol = solve_unique(sub, rhs);
    if (!sol) return;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (dot(a.row(i), *sol) > b[i]) return;
    }
    if (std::find(out.begin(), out.end(), *sol) == out.end()) out.push_back(*sol);
  });
  return out;
}

// Facets of conv(points) for full-dimensional points in Q^n: every n-subset
// spanning a unique hyperplane a.y = b with all points on one side. Returned
// as primitive integer (a, b) with a.y <= b, sorted and deduplicated.
inline std::vector<RationalVector> brute_force_facets(const std::vector<RationalVector>& points) {
  const std::size_t n = points.front().size();
  std::vector<RationalVector> out;
  for_each_subset(points.size(), n, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = points[idx[i]][j];
      m(i, n) = -1;
    }
    const auto red = rref(m);
    if (red.pivots.size() != n) return;
    // The single free column gives the kernel vector.
    std::size_t free = 0;
    while (free < red.pivots.size() && red.pivots[free] == free) ++free;
    RationalVector z(n + 1);
    z[free] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) z[red.pivots[r]] = -red.matrix(r, free);
    int side = 0;
    for (const auto& p : points) {
      Rational v = z[n];
      v = -v;
      for (std::size_t j = 0; j < n; ++j) v += z[j] * p[j];
      const int s = sgn(v);
      if (s == 0) continue;
      if (side == 0) side = s;
      else if (side != s) return;
    }
    if (side == 0) return;
    if (side > 0) {
      for (auto& x : z) x = -x;
    }
    const Rational scale = primitive_scale(z);
    for (auto& x : z) x *= scale;
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bellpoly::testing
