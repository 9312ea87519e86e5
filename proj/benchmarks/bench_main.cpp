#include <benchmark/benchmark.h>

#include "apc/eschenburg.hpp"
#include "apc/topology.hpp"

using namespace apc;

static void BM_BuildF(benchmark::State& state) {
  Triple t(5, -3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_f(t));
}
BENCHMARK(BM_BuildF);

static void BM_DecideNonpositiveEasy(benchmark::State& state) {
  BiPoly f = build_f(Triple(3, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(decide_nonpositive(f, Box()));
}
BENCHMARK(BM_DecideNonpositiveEasy);

static void BM_DecideNonpositiveEdgeTouching(benchmark::State& state) {
  BiPoly f = build_f(Triple(2, -5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(decide_nonpositive(f, Box()));
}
BENCHMARK(BM_DecideNonpositiveEdgeTouching);

static void BM_ClassifyPolynomial(benchmark::State& state) {
  Triple t(state.range(0), -1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(classify_polynomial(t));
}
BENCHMARK(BM_ClassifyPolynomial)->Arg(1)->Arg(2)->Arg(3);

static void BM_ScanBound(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cross_validate(static_cast<int>(state.range(0)), {}, 2));
}
BENCHMARK(BM_ScanBound)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EllInvariant(benchmark::State& state) {
  Triple t(7, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ell(50, t));
}
BENCHMARK(BM_EllInvariant);

BENCHMARK_MAIN();
