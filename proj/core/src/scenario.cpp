#include "bellpoly/scenario.hpp"

#include "bellpoly/linalg.hpp"

#include <map>
#include <stdexcept>

namespace bellpoly {

Scenario::Scenario(int d) : d_(d) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2, got " + std::to_string(d));
}

std::string to_string(const DeterministicStrategy& l) {
  return std::to_string(l.a1) + "," + std::to_string(l.a2) + "," + std::to_string(l.b1) + "," +
         std::to_string(l.b2);
}

void check_strategy(int d, const DeterministicStrategy& l) {
  for (int v : {l.a1, l.a2, l.b1, l.b2}) {
    if (v < 0 || v >= d) {
      throw std::invalid_argument("strategy (" + to_string(l) + ") out of range for d=" + std::to_string(d));
    }
  }
}

std::size_t strategy_index(int d, const DeterministicStrategy& l) {
  const auto n = static_cast<std::size_t>(d);
  return ((static_cast<std::size_t>(l.a1) * n + l.a2) * n + l.b1) * n + l.b2;
}

DeterministicStrategy strategy_from_index(int d, std::size_t index) {
  const auto n = static_cast<std::size_t>(d);
  DeterministicStrategy l;
  l.b2 = static_cast<int>(index % n);
  index /= n;
  l.b1 = static_cast<int>(index % n);
  index /= n;
  l.a2 = static_cast<int>(index % n);
  index /= n;
  l.a1 = static_cast<int>(index);
  check_strategy(d, l);
  return l;
}

Behavior::Behavior(int d) : d_(d), coords_(static_cast<std::size_t>(4 * d * d)) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
}

Behavior::Behavior(int d, RationalVector coords) : d_(d), coords_(std::move(coords)) {
  if (d < 2) throw std::invalid_argument("outcome count d must be >= 2");
  if (coords_.size() != static_cast<std::size_t>(4 * d * d)) {
    throw std::invalid_argument("behavior for d=" + std::to_string(d) + " needs " +
                                std::to_string(4 * d * d) + " coordinates, got " +
                                std::to_string(coords_.size()));
  }
}

std::array<std::size_t, 4> generator_support(int d, const DeterministicStrategy& l) {
  check_strategy(d, l);
  return {behavior_index(d, 1, 1, l.a1, l.b1), behavior_index(d, 1, 2, l.a1, l.b2),
          behavior_index(d, 2, 1, l.a2, l.b1), behavior_index(d, 2, 2, l.a2, l.b2)};
}

Behavior generator(const Scenario& scenario, const DeterministicStrategy& lambda) {
  Behavior g(scenario.d());
  for (auto idx : generator_support(scenario.d(), lambda)) g.coords()[idx] = 1;
  return g;
}

std::vector<DeterministicStrategy> all_strategies(const Scenario& scenario) {
  std::vector<DeterministicStrategy> out;
  out.reserve(scenario.strategy_count());
  for (std::size_t i = 0; i < scenario.strategy_count(); ++i) out.push_back(strategy_from_index(scenario.d(), i));
  return out;
}

std::vector<Behavior> all_generators(const Scenario& scenario) {
  std::vector<Behavior> out;
  out.reserve(scenario.strategy_count());
  for (const auto& l : all_strategies(scenario)) out.push_back(generator(scenario, l));
  return out;
}

std::vector<RationalVector> all_generator_vectors(const Scenario& scenario) {
  std::vector<RationalVector> out;
  out.reserve(scenario.strategy_count());
  for (const auto& l : all_strategies(scenario)) out.push_back(generator(scenario, l).coords());
  return out;
}

ConstraintSystem constraint_matrix(const Scenario& scenario) {
  const int d = scenario.d();
  const std::size_t n = scenario.behavior_dim();
  ConstraintSystem sys{RationalMatrix(0, n), {}};
  RationalVector row(n);

  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (int k = 0; k < d; ++k)
        for (int s = 0; s < d; ++s) row[behavior_index(d, a, b, k, s)] = 1;
      sys.rows.append_row(row);
      sys.rhs.push_back(1);
    }
  }
  // Alice's marginal for A_a = k must not depend on Bob's setting.
  for (int a = 1; a <= 2; ++a) {
    for (int k = 0; k < d; ++k) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (int s = 0; s < d; ++s) {
        row[behavior_index(d, a, 1, k, s)] = 1;
        row[behavior_index(d, a, 2, k, s)] = -1;
      }
      sys.rows.append_row(row);
      sys.rhs.push_back(0);
    }
  }
  for (int b = 1; b <= 2; ++b) {
    for (int s = 0; s < d; ++s) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (int k = 0; k < d; ++k) {
        row[behavior_index(d, 1, b, k, s)] = 1;
        row[behavior_index(d, 2, b, k, s)] = -1;
      }
      sys.rows.append_row(row);
      sys.rhs.push_back(0);
    }
  }
  return sys;
}

Behavior uniform_behavior(const Scenario& scenario) {
  const int d = scenario.d();
  return Behavior(d, RationalVector(scenario.behavior_dim(), frac(1, d * d)));
}

bool is_normalized(const Behavior& p) {
  const auto sys = constraint_matrix(Scenario(p.d()));
  for (std::size_t r = 0; r < 4; ++r) {
    if (dot(sys.rows.row(r), p.coords()) != sys.rhs[r]) return false;
  }
  return true;
}

bool is_nosignaling(const Behavior& p) {
  const auto sys = constraint_matrix(Scenario(p.d()));
  for (std::size_t r = 4; r < sys.rows.rows(); ++r) {
    if (dot(sys.rows.row(r), p.coords()) != sys.rhs[r]) return false;
  }
  return true;
}

bool is_probability(const Behavior& p) {
  for (const auto& x : p.coords()) {
    if (sgn(x) < 0) return false;
  }
  return is_normalized(p) && is_nosignaling(p);
}

std::size_t polytope_affine_dim(const Scenario& scenario) {
  // Generators are streamed as 4-element supports so large d never holds all
  // d^4 dense vectors at once.
  const int d = scenario.d();
  const auto sys = constraint_matrix(scenario);
  const auto strategies = all_strategies(scenario);
  for (const auto& l : strategies) {
    const auto support = generator_support(d, l);
    for (std::size_t r = 0; r < sys.rows.rows(); ++r) {
      Rational lhs = 0;
      for (const std::size_t c : support) lhs += sys.rows(r, c);
      if (lhs != sys.rhs[r]) throw std::logic_error("generator violates the constraint system");
    }
  }
  const std::size_t bound = scenario.behavior_dim() - rank(sys.rows);
  const auto base = generator_support(d, strategies.front());
  RowBasis basis(scenario.behavior_dim());
  std::vector<std::pair<std::size_t, Rational>> diff;
  for (std::size_t i = 1; i < strategies.size() && basis.rank() < bound; ++i) {
    const auto support = generator_support(d, strategies[i]);
    std::map<std::size_t, Rational> acc;
    for (const std::size_t c : support) acc[c] += 1;
    for (const std::size_t c : base) acc[c] -= 1;
    diff.clear();
    for (const auto& [c, v] : acc) {
      if (sgn(v) != 0) diff.emplace_back(c, v);
    }
    if (!diff.empty()) basis.insert_sparse(diff);
  }
  return basis.rank();
}

std::vector<RationalVector> single_party_basis(int d) {
  std::vector<RationalVector> out;
  auto make = [d](int first, int second) {
    RationalVector v(static_cast<std::size_t>(2 * d));
    v[static_cast<std::size_t>(first)] = 1;
    v[static_cast<std::size_t>(d + second)] = 1;
    return v;
  };
  for (int j = 0; j < d; ++j) out.push_back(make(0, j));
  for (int i = 1; i < d; ++i) out.push_back(make(i, d - 1));
  return out;
}

std::vector<DeterministicStrategy> tensor_basis_strategies(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < d; ++j) pairs.emplace_back(0, j);
  for (int i = 1; i < d; ++i) pairs.emplace_back(i, d - 1);
  std::vector<DeterministicStrategy> out;
  for (const auto& [a1, a2] : pairs)
    for (const auto& [b1, b2] : pairs) out.push_back({a1, a2, b1, b2});
  return out;
}

}  // namespace bellpoly
