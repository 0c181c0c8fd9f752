#include "bellpoly/cglmp.hpp"

#include "bellpoly/linalg.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace bellpoly {

namespace {

int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

int window_low(int d) { return -(d / 2); }
int window_high(int d) { return (d - 1) / 2; }

int wrap_to_window(int x, int d) {
  int v = mod(x, d);
  if (v > window_high(d)) v -= d;
  return v;
}

Rstu rstu(const DeterministicStrategy& l, int d) {
  check_strategy(d, l);
  return {wrap_to_window(l.a1 - l.b1, d), wrap_to_window(-l.a1 + l.b2, d), wrap_to_window(-l.a2 + l.b1 - 1, d),
          wrap_to_window(l.a2 - l.b2, d)};
}

void check_rstu(const Rstu& v, int d) {
  for (int x : v.values()) {
    if (x < window_low(d) || x > window_high(d)) {
      throw std::invalid_argument("rstu value " + std::to_string(x) + " outside window for d=" + std::to_string(d));
    }
  }
  const int sum = v.sum();
  if (mod(sum + 1, d) != 0) throw std::invalid_argument("rstu sum is not -1 mod d");
  if (sum != d - 1 && sum != -1 && sum != -d - 1) {
    throw std::invalid_argument("rstu sum " + std::to_string(sum) + " is not one of d-1, -1, -d-1");
  }
}

Rational cglmp_f(int x, int d) {
  const Rational slope = frac(-2 * x, d - 1);
  if (x >= 0) return slope + 1;
  return slope - frac(d + 1, d - 1);
}

Rational eval_on_generator(const DeterministicStrategy& lambda, int d) {
  const Rstu v = rstu(lambda, d);
  return cglmp_f(v.r, d) + cglmp_f(v.s, d) + cglmp_f(v.t, d) + cglmp_f(v.u, d);
}

Inequality cglmp_inequality(int d) {
  const Space space = Space::behavior(d);
  RationalVector coeffs(space.dim);
  // P(A_a - B_b = m mod d) = sum_j P(A_a = m + j mod d, B_b = j)
  auto add_term = [&](int a, int b, int m, const Rational& weight) {
    for (int j = 0; j < d; ++j) coeffs[behavior_index(d, a, b, mod(m + j, d), j)] += weight;
  };
  for (int k = 0; k <= d / 2 - 1; ++k) {
    const Rational c = 1 - frac(2 * k, d - 1);
    add_term(1, 1, k, c);
    add_term(1, 1, -k - 1, -c);
    add_term(1, 2, -k, c);
    add_term(1, 2, k + 1, -c);
    add_term(2, 1, -k - 1, c);
    add_term(2, 1, k, -c);
    add_term(2, 2, k, c);
    add_term(2, 2, -k - 1, -c);
  }
  return Inequality(space, std::move(coeffs), 2);
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1: return "case1";
    case CaseTag::case2a: return "case2a";
    case CaseTag::case2b: return "case2b";
    case CaseTag::case3: return "case3";
    case CaseTag::case4a: return "case4a";
    case CaseTag::case4b: return "case4b";
    case CaseTag::case5: return "case5";
  }
  return "unknown";
}

CaseClass classify_case(const Rstu& v, int d) {
  check_rstu(v, d);
  const auto vals = v.values();
  const int negatives = static_cast<int>(std::count_if(vals.begin(), vals.end(), [](int x) { return x < 0; }));
  const int sum = v.sum();
  const Rational two = 2;
  const Rational low = frac(-2, d - 1);
  const Rational lowest = frac(-2 * (d + 1), d - 1);
  auto fail = [&]() -> CaseClass {
    throw std::invalid_argument("impossible sign pattern: " + std::to_string(negatives) + " negatives with sum " +
                                std::to_string(sum));
  };
  switch (negatives) {
    case 0: return sum == d - 1 ? CaseClass{CaseTag::case1, 0, sum, two} : fail();
    case 1:
      if (sum == -1) return {CaseTag::case2a, 1, sum, two};
      return sum == d - 1 ? CaseClass{CaseTag::case2b, 1, sum, low} : fail();
    case 2: return sum == -1 ? CaseClass{CaseTag::case3, 2, sum, low} : fail();
    case 3:
      if (sum == -1) return {CaseTag::case4a, 3, sum, lowest};
      return sum == -d - 1 ? CaseClass{CaseTag::case4b, 3, sum, low} : fail();
    default: return sum == -d - 1 ? CaseClass{CaseTag::case5, 4, sum, lowest} : fail();
  }
}

Condition1Report verify_condition1(int d, unsigned threads) {
  const Scenario sc(d);
  const Inequality ineq = cglmp_inequality(d);
  const Rational allowed[] = {Rational(2), frac(-2, d - 1), frac(-2 * (d + 1), d - 1)};
  const std::size_t total = sc.strategy_count();

  auto work = [&](std::size_t begin, std::size_t end) {
    Condition1Report part;
    for (std::size_t i = begin; i < end; ++i) {
      const auto l = strategy_from_index(d, i);
      Rational coeff_form = 0;
      for (auto idx : generator_support(d, l)) coeff_form += ineq.coeffs[idx];
      const Rational f_form = eval_on_generator(l, d);
      if (coeff_form != f_form) {
        throw VerificationFailure("d=" + std::to_string(d) + " strategy (" + to_string(l) +
                                  "): coefficient form " + to_string(coeff_form) + " != f-form " +
                                  to_string(f_form));
      }
      if (std::find(std::begin(allowed), std::end(allowed), f_form) == std::end(allowed)) {
        throw VerificationFailure("d=" + std::to_string(d) + " strategy (" + to_string(l) + "): value " +
                                  to_string(f_form) + " outside the allowed set");
      }
      const CaseClass cls = classify_case(rstu(l, d), d);
      if (cls.value != f_form) {
        throw VerificationFailure("d=" + std::to_string(d) + " strategy (" + to_string(l) + "): " +
                                  to_string(cls.tag) + " predicts " + to_string(cls.value) + ", got " +
                                  to_string(f_form));
      }
      ++part.histogram[f_form];
      ++part.cases[cls.tag];
    }
    return part;
  };

  threads = std::max(1u, threads);
  std::vector<std::future<Condition1Report>> parts;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    const std::size_t end = std::min(total, begin + chunk);
    if (threads == 1) {
      std::promise<Condition1Report> p;
      p.set_value(work(begin, end));
      parts.push_back(p.get_future());
    } else {
      parts.push_back(std::async(std::launch::async, work, begin, end));
    }
  }

  Condition1Report report;
  report.d = d;
  report.generators = total;
  for (auto& f : parts) {
    const auto part = f.get();
    for (const auto& [v, n] : part.histogram) report.histogram[v] += n;
    for (const auto& [c, n] : part.cases) report.cases[c] += n;
  }
  report.max = report.histogram.rbegin()->first;
  if (report.max != 2) {
    throw VerificationFailure("d=" + std::to_string(d) + ": maximum over generators is " + to_string(report.max));
  }
  return report;
}

std::vector<DeterministicStrategy> saturating_generators(int d) {
  const Scenario sc(d);
  std::vector<DeterministicStrategy> out;
  for (const auto& l : all_strategies(sc)) {
    const bool saturates = eval_on_generator(l, d) == 2;
    const CaseTag tag = classify_case(rstu(l, d), d).tag;
    const bool predicted = tag == CaseTag::case1 || tag == CaseTag::case2a;
    if (saturates != predicted) {
      throw VerificationFailure("strategy (" + to_string(l) + ") breaks the saturating-set characterization");
    }
    if (saturates) out.push_back(l);
  }
  return out;
}

TightnessReport tightness_rank(int d) {
  const auto sat = saturating_generators(d);
  const std::size_t dim = static_cast<std::size_t>(4 * d * d);
  RowBasis basis(dim);
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (const auto& l : sat) {
    entries.clear();
    for (auto idx : generator_support(d, l)) entries.emplace_back(idx, Rational(1));
    basis.insert_sparse(entries);
  }
  TightnessReport rep;
  rep.d = d;
  rep.saturating = sat.size();
  rep.rank = basis.rank();
  rep.h = static_cast<std::size_t>(4 * d * (d - 1));
  rep.tight = rep.rank == rep.h;
  if (!rep.tight) {
    throw VerificationFailure("d=" + std::to_string(d) + ": saturating generators reach rank " +
                              std::to_string(rep.rank) + ", need " + std::to_string(rep.h));
  }
  return rep;
}

std::string to_string(WitnessScheme scheme) {
  return scheme == WitnessScheme::example1 ? "example1" : "example2";
}

std::vector<WitnessStep> witness_schedule(int d) {
  if (d < 2) throw std::invalid_argument("witness_schedule: d must be >= 2");
  const int e = d / 4;
  std::vector<WitnessStep> steps;
  auto ex1 = [&](int a, int b1, int b2, int b3) { steps.push_back({WitnessScheme::example1, {a, b1, b2, b3}}); };
  auto ex2 = [&](int a, int b1, int b2) { steps.push_back({WitnessScheme::example2, {a, b1, b2, 0}}); };

  // First phase: all four variables nonnegative, sum d-1.
  switch (d % 4) {
    case 0:
      for (int k = 1; k <= e; ++k) {
        ex1(e - k, e + k - 1, e, e);
        if (k <= e - 1) ex1(e + k, e - k, e - 1, e);
      }
      break;
    case 1:
      // Parameters fill (r, s, t, u) in (b1, b2, a, a) order on this branch.
      ex2(e - 1, e + 1, e + 1);
      ex2(e, e - 1, e + 1);
      for (int k = 2; k <= e; ++k) {
        ex1(e + k, e - k + 1, e - 1, e);
        ex1(e - k, e + k, e, e);
      }
      break;
    case 2:
      for (int k = 1; k <= e; ++k) {
        ex1(e + k, e - k + 1, e, e);
        ex1(e - k, e + k, e + 1, e);
      }
      break;
    default:
      // The first step fills (r, s, t, u) as (a, b1, a, b2).
      ex2(e + 1, e, e);
      for (int k = 1; k <= e; ++k) {
        ex1(e - k, e + k, e + 1, e + 1);
        ex1(e + k + 1, e - k, e + 1, e);
      }
      break;
  }
  // Second phase: one strictly negative variable, sum -1.
  const int negative_steps = (d % 4 == 0 || d % 4 == 1) ? 2 * e : 2 * e + 1;
  for (int k = 1; k <= negative_steps; ++k) ex1(-k, k - 1, 0, 0);
  return steps;
}

std::size_t witness_frame_index(int d, int a, int b, int k, int s) {
  const auto block = static_cast<std::size_t>(((a - 1) * 2 + (b - 1)) * d * d);
  int x = 0;
  int y = 0;
  if (a == 1 && b == 1) {
    x = k;
    y = k - s;
  } else if (a == 1) {
    x = k;
    y = s - k;
  } else if (b == 1) {
    x = s;
    y = s - k - 1;
  } else {
    x = s;
    y = k - s;
  }
  return block + static_cast<std::size_t>(mod(x, d) * d + mod(y, d));
}

std::size_t behavior_index_from_witness(int d, std::size_t frame_index) {
  const auto d2 = static_cast<std::size_t>(d * d);
  const int block = static_cast<int>(frame_index / d2);
  const int x = static_cast<int>(frame_index % d2) / d;
  const int y = static_cast<int>(frame_index % d2) % d;
  const int a = block / 2 + 1;
  const int b = block % 2 + 1;
  int k = 0;
  int s = 0;
  if (a == 1 && b == 1) {
    k = x;
    s = x - y;
  } else if (a == 1) {
    k = x;
    s = y + x;
  } else if (b == 1) {
    s = x;
    k = x - y - 1;
  } else {
    s = x;
    k = y + x;
  }
  return behavior_index(d, a, b, mod(k, d), mod(s, d));
}

DeterministicStrategy strategy_from_witness(int d, int A, const Rstu& v) {
  DeterministicStrategy l;
  l.a1 = mod(A, d);
  l.b1 = mod(A - v.r, d);
  l.b2 = mod(A + v.s, d);
  l.a2 = mod(l.b1 - v.t - 1, d);
  if (mod(l.a2 - l.b2 - v.u, d) != 0) {
    throw std::invalid_argument("witness values do not satisfy r+s+t+u = -1 mod d");
  }
  return l;
}

namespace {

std::vector<Rstu> step_patterns(const WitnessStep& step) {
  const auto [a, b1, b2, b3] = step.params;
  if (step.scheme == WitnessScheme::example1) {
    return {{a, b1, b2, b3}, {b3, a, b1, b2}, {b2, b3, a, b1}, {b1, b2, b3, a}};
  }
  return {{a, a, b1, b2}, {a, b1, a, b2}, {a, b1, b2, a}, {b1, a, a, b2}};
}

}  // namespace

std::array<std::array<int, 4>, 4> example2_minor(int d, const WitnessStep& step, int A) {
  const int a = step.params[0];
  const int b1 = step.params[1];
  const auto patterns = step_patterns(step);
  std::array<std::array<int, 4>, 4> minor{};
  auto same = [d](int x, int y) { return mod(x - y, d) == 0; };
  for (std::size_t i = 0; i < 4; ++i) {
    const Rstu& v = patterns[i];
    // Blocks: |A,r>, |A,s>, |A-r,t>, |A+s,u> against |A,a>, |A,a>, |A-a,a>, |A+b1,a>.
    minor[i][0] = same(v.r, a) ? 1 : 0;
    minor[i][1] = same(v.s, a) ? 1 : 0;
    minor[i][2] = (same(A - v.r, A - a) && same(v.t, a)) ? 1 : 0;
    minor[i][3] = (same(A + v.s, A + b1) && same(v.u, a)) ? 1 : 0;
  }
  return minor;
}

std::vector<WitnessBatch> constructive_witness(int d) {
  const auto schedule = witness_schedule(d);
  const std::size_t dim = static_cast<std::size_t>(4 * d * d);
  const std::size_t per_batch = static_cast<std::size_t>(4 * d);
  if (schedule.size() != static_cast<std::size_t>(d - 1)) {
    throw VerificationFailure("schedule has " + std::to_string(schedule.size()) + " steps, expected d-1");
  }
  RowBasis basis(dim);
  std::vector<WitnessBatch> batches;
  std::vector<std::pair<std::size_t, Rational>> entries;

  for (std::size_t step_index = 0; step_index < schedule.size(); ++step_index) {
    const auto& step = schedule[step_index];
    const std::string where = "d=" + std::to_string(d) + " step " + std::to_string(step_index);
    WitnessBatch batch;
    batch.step_index = step_index;
    batch.scheme = step.scheme;
    batch.params = step.params;

    for (int A = 0; A < d; ++A) {
      if (step.scheme == WitnessScheme::example2) {
        const auto minor = example2_minor(d, step, A);
        RationalMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) m(i, j) = minor[i][j];
        if (sgn(determinant(m)) == 0) throw VerificationFailure(where + ": example2 minor is singular");
      }
      for (const Rstu& v : step_patterns(step)) {
        try {
          check_rstu(v, d);
        } catch (const std::invalid_argument& e) {
          throw VerificationFailure(where + ": " + e.what());
        }
        WitnessVector w;
        w.A = A;
        w.values = v;
        w.strategy = strategy_from_witness(d, A, v);
        if (eval_on_generator(w.strategy, d) != 2) {
          throw VerificationFailure(where + ": vector for strategy (" + to_string(w.strategy) +
                                    ") does not saturate the inequality");
        }
        const auto support = generator_support(d, w.strategy);
        for (std::size_t i = 0; i < 4; ++i) {
          const int a = static_cast<int>(i / 2) + 1;
          const int b = static_cast<int>(i % 2) + 1;
          w.support[i] = witness_frame_index(d, a, b, w.strategy.alice(a), w.strategy.bob(b));
          if (behavior_index_from_witness(d, w.support[i]) != support[i]) {
            throw VerificationFailure(where + ": frame permutation is not invertible");
          }
        }
        batch.vectors.push_back(w);
      }
    }
    for (const auto& w : batch.vectors) {
      entries.clear();
      for (auto idx : w.support) entries.emplace_back(idx, Rational(1));
      basis.insert_sparse(entries);
    }
    batch.rank_after = basis.rank();
    const std::size_t expected = per_batch * (step_index + 1);
    if (batch.vectors.size() != per_batch || batch.rank_after != expected) {
      throw VerificationFailure(where + ": rank " + std::to_string(batch.rank_after) + " after batch, expected " +
                                std::to_string(expected));
    }
    batches.push_back(std::move(batch));
  }
  return batches;
}

}  // namespace bellpoly
