#include "bellpoly/symmetry.hpp"

#include "bellpoly/facets.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace bellpoly {

namespace {

int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

void check_perm(const std::vector<int>& p, int d) {
  if (p.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("outcome permutation has wrong length");
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("outcome map is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::vector<std::vector<int>> all_perms(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_same_space(const SymmetryOp& op, const Space& space) {
  if (!(op.space == space)) {
    throw std::invalid_argument("symmetry for " + describe(op.space) + " applied to " + describe(space));
  }
}

}  // namespace

SymmetryOp SymmetryOp::identity(const Space& space) {
  SymmetryOp op;
  op.space = space;
  if (space.kind == SpaceKind::behavior) {
    std::vector<int> id(static_cast<std::size_t>(space.d));
    std::iota(id.begin(), id.end(), 0);
    op.perms = {id, id, id, id};
  } else if (space.kind != SpaceKind::correlator) {
    throw std::invalid_argument("no symmetry group for " + describe(space));
  }
  return op;
}

Permutation to_permutation(const SymmetryOp& op) {
  const int d = op.space.d;
  Permutation out(op.space.dim);
  if (op.space.kind == SpaceKind::behavior) {
    for (const auto& p : op.perms) check_perm(p, d);
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int k = 0; k < d; ++k)
          for (int s = 0; s < d; ++s) {
            int k2 = op.perms[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k)];
            int s2 = op.perms[static_cast<std::size_t>(b + 1)][static_cast<std::size_t>(s)];
            int a2 = op.swap_A ? 3 - a : a;
            int b2 = op.swap_B ? 3 - b : b;
            if (op.swap_parties) {
              std::swap(a2, b2);
              std::swap(k2, s2);
            }
            out[behavior_index(d, a, b, k, s)] = behavior_index(d, a2, b2, k2, s2);
          }
    return out;
  }
  if (op.space.kind != SpaceKind::correlator) throw std::invalid_argument("no symmetry group for " + describe(op.space));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int n = 0; n < d; ++n) {
        int n2 = n + op.shifts[static_cast<std::size_t>(a - 1)] - op.shifts[static_cast<std::size_t>(b + 1)];
        if (op.reflect) n2 = -n2;
        int a2 = op.swap_A ? 3 - a : a;
        int b2 = op.swap_B ? 3 - b : b;
        if (op.swap_parties) {
          std::swap(a2, b2);
          n2 = -n2;
        }
        out[corr_index(d, a, b, n)] = corr_index(d, a2, b2, mod(n2, d));
      }
  return out;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

Permutation invert(const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = i;
  return out;
}

RationalVector permute(const Permutation& g, std::span<const Rational> x) {
  if (g.size() != x.size()) throw std::invalid_argument("permutation does not match vector length");
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[g[i]] = x[i];
  return out;
}

Behavior apply(const SymmetryOp& op, const Behavior& p) {
  check_same_space(op, Space::behavior(p.d()));
  return Behavior(p.d(), permute(to_permutation(op), p.coords()));
}

CorrVector apply(const SymmetryOp& op, const CorrVector& c) {
  check_same_space(op, Space::correlator(c.d()));
  return CorrVector(c.d(), permute(to_permutation(op), c.coords()));
}

Inequality permute(const Permutation& g, const Inequality& ineq) {
  return Inequality(ineq.space, permute(g, ineq.coeffs), ineq.bound);
}

Inequality apply(const SymmetryOp& op, const Inequality& ineq) {
  check_same_space(op, ineq.space);
  return permute(to_permutation(op), ineq);
}

SymmetryOp to_behavior_op(const SymmetryOp& corr_op) {
  if (corr_op.space.kind != SpaceKind::correlator) throw std::invalid_argument("expected a correlator-space op");
  const int d = corr_op.space.d;
  SymmetryOp op = SymmetryOp::identity(Space::behavior(d));
  op.swap_parties = corr_op.swap_parties;
  op.swap_A = corr_op.swap_A;
  op.swap_B = corr_op.swap_B;
  for (std::size_t o = 0; o < 4; ++o)
    for (int k = 0; k < d; ++k) {
      const int shifted = k + corr_op.shifts[o];
      op.perms[o][static_cast<std::size_t>(k)] = mod(corr_op.reflect ? -shifted : shifted, d);
    }
  return op;
}

DeterministicStrategy apply(const SymmetryOp& op, const DeterministicStrategy& l) {
  if (op.space.kind != SpaceKind::behavior) throw std::invalid_argument("strategies transform in behavior space");
  const int d = op.space.d;
  check_strategy(d, l);
  std::array<int, 2> alice{};
  std::array<int, 2> bob{};
  for (int a = 1; a <= 2; ++a) {
    const int a2 = op.swap_A ? 3 - a : a;
    alice[static_cast<std::size_t>(a2 - 1)] =
        op.perms[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(l.alice(a))];
  }
  for (int b = 1; b <= 2; ++b) {
    const int b2 = op.swap_B ? 3 - b : b;
    bob[static_cast<std::size_t>(b2 - 1)] =
        op.perms[static_cast<std::size_t>(b + 1)][static_cast<std::size_t>(l.bob(b))];
  }
  if (op.swap_parties) std::swap(alice, bob);
  return {alice[0], alice[1], bob[0], bob[1]};
}

std::size_t group_order(const Space& space) {
  const auto d = static_cast<std::size_t>(space.d);
  if (space.kind == SpaceKind::correlator) return 16 * d * d * d;
  if (space.kind != SpaceKind::behavior) throw std::invalid_argument("no symmetry group for " + describe(space));
  std::size_t f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= i;
  return 8 * f * f * f * f;
}

void for_each_element(const Space& space, const std::function<void(const SymmetryOp&)>& fn,
                      const SymmetryOptions& options) {
  SymmetryOp op = SymmetryOp::identity(space);
  const int d = space.d;
  if (space.kind == SpaceKind::behavior && d >= 4 && !options.allow_large) {
    throw GroupTooLarge("behavior-space group for d=" + std::to_string(d) + " has " +
                        std::to_string(group_order(space)) + " elements; pass the large-group flag to proceed");
  }
  for (int flags = 0; flags < 8; ++flags) {
    op.swap_parties = (flags & 4) != 0;
    op.swap_A = (flags & 2) != 0;
    op.swap_B = (flags & 1) != 0;
    if (space.kind == SpaceKind::behavior) {
      const auto perms = all_perms(d);
      for (const auto& p0 : perms)
        for (const auto& p1 : perms)
          for (const auto& p2 : perms)
            for (const auto& p3 : perms) {
              op.perms = {p0, p1, p2, p3};
              fn(op);
            }
    } else {
      for (int reflect = 0; reflect < 2; ++reflect) {
        op.reflect = reflect != 0;
        for (int s1 = 0; s1 < d; ++s1)
          for (int s2 = 0; s2 < d; ++s2)
            for (int s3 = 0; s3 < d; ++s3) {
              op.shifts = {0, s1, s2, s3};
              fn(op);
            }
      }
    }
  }
}

std::vector<Permutation> group_permutations(const Space& space, const SymmetryOptions& options) {
  std::vector<Permutation> out;
  out.reserve(group_order(space));
  for_each_element(space, [&](const SymmetryOp& op) { out.push_back(to_permutation(op)); }, options);
  return out;
}

namespace {

const std::vector<Permutation>& cached_group(const Space& space, const SymmetryOptions& options) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Permutation>>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(space.kind), space.d}];
  if (!slot) slot = std::make_unique<std::vector<Permutation>>(group_permutations(space, options));
  return *slot;
}

Inequality min_over(const std::vector<Permutation>& group, std::size_t begin, std::size_t end,
                    const Inequality& ineq) {
  Inequality best = canonicalize(permute(group[begin], ineq));
  for (std::size_t i = begin + 1; i < end; ++i) {
    Inequality cand = canonicalize(permute(group[i], ineq));
    if (compare(cand, best) < 0) best = std::move(cand);
  }
  return best;
}

}  // namespace

Inequality canonical_class(const Inequality& ineq, const SymmetryOptions& options) {
  if (ineq.space.kind == SpaceKind::behavior && ineq.space.d >= 4 && !options.allow_large) {
    throw GroupTooLarge("behavior-space classification for d=" + std::to_string(ineq.space.d) +
                        " needs the large-group flag");
  }
  const auto& group = cached_group(ineq.space, options);
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || group.size() < 64) return min_over(group, 0, group.size(), ineq);
  std::vector<std::future<Inequality>> parts;
  const std::size_t chunk = (group.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < group.size(); begin += chunk) {
    const std::size_t end = std::min(group.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&, begin, end] { return min_over(group, begin, end, ineq); }));
  }
  Inequality best = parts.front().get();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Inequality cand = parts[i].get();
    if (compare(cand, best) < 0) best = std::move(cand);
  }
  return best;
}

bool equivalent(const Inequality& a, const Inequality& b, const SymmetryOptions& options) {
  if (!(a.space == b.space)) {
    throw std::invalid_argument("cannot compare inequalities in " + describe(a.space) + " and " + describe(b.space));
  }
  return canonical_class(a, options) == canonical_class(b, options);
}

std::optional<SymmetryOp> find_mapping(const Inequality& from, const Inequality& to, const SymmetryOptions& options) {
  if (!(from.space == to.space)) throw std::invalid_argument("find_mapping: space mismatch");
  const Inequality target = canonicalize(to);
  std::optional<SymmetryOp> found;
  for_each_element(
      from.space,
      [&](const SymmetryOp& op) {
        if (!found && canonicalize(apply(op, from)) == target) found = op;
      },
      options);
  return found;
}

}  // namespace bellpoly
