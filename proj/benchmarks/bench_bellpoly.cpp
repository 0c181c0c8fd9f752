#include "bellpoly/cglmp.hpp"
#include "bellpoly/correlators.hpp"
#include "bellpoly/facets.hpp"
#include "bellpoly/linalg.hpp"
#include "bellpoly/membership.hpp"
#include "bellpoly/symmetry.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bellpoly;

void BM_Condition1(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_condition1(d));
  state.counters["generators"] = static_cast<double>(d * d * d * d);
}
BENCHMARK(BM_Condition1)->DenseRange(3, 10, 7)->Unit(benchmark::kMillisecond);

void BM_TightnessRank(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tightness_rank(d));
}
BENCHMARK(BM_TightnessRank)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ConstructiveWitness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constructive_witness(d));
}
BENCHMARK(BM_ConstructiveWitness)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AffineDim(benchmark::State& state) {
  const Scenario sc(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polytope_affine_dim(sc));
}
BENCHMARK(BM_AffineDim)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// Double description on the correlator polytope; d=4 is the long acceptance case.
void BM_EnumerateCorr(benchmark::State& state) {
  const auto vrep = correlator_vrep(static_cast<int>(state.range(0)));
  std::size_t facets = 0;
  for (auto _ : state) {
    const auto h = enumerate_facets(vrep);
    facets = h.facets.size();
    benchmark::DoNotOptimize(h);
  }
  state.counters["facets"] = static_cast<double>(facets);
}
BENCHMARK(BM_EnumerateCorr)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateBehavior3(benchmark::State& state) {
  const auto vrep = behavior_vrep(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets(vrep));
}
BENCHMARK(BM_EnumerateBehavior3)->Unit(benchmark::kMillisecond);

void BM_CanonicalClass(benchmark::State& state) {
  const auto ineq = cglmp_corr_inequality(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_class(ineq));
}
BENCHMARK(BM_CanonicalClass)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

Behavior pr_box() {
  Behavior p(2);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int k = 0; k < 2; ++k) p.at(a, b, k, (k + (a == 2 && b == 2)) % 2) = frac(1, 2);
  return p;
}

void BM_MembershipLocal(benchmark::State& state) {
  const auto p = uniform_behavior(Scenario(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(local_decompose(p));
}
BENCHMARK(BM_MembershipLocal)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MembershipPRBox(benchmark::State& state) {
  const auto p = pr_box();
  for (auto _ : state) benchmark::DoNotOptimize(local_decompose(p));
}
BENCHMARK(BM_MembershipPRBox)->Unit(benchmark::kMillisecond);

void BM_NosignalingMax(benchmark::State& state) {
  const auto ineq = cglmp_inequality(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nosignaling_max(ineq));
}
BENCHMARK(BM_NosignalingMax)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
