#include <benchmark/benchmark.h>

#include "parallelo/experiments.hpp"
#include "parallelo/sieve.hpp"
#include "parallelo/visible_count.hpp"

namespace {

using parallelo::CanonicalParallelogram;

// Middle of the range, where columns are widest for the formula route.
CanonicalParallelogram middle(std::int64_t n) { return CanonicalParallelogram(n / 2 - (n % 2 == 0 ? 1 : 0), n); }

void BM_CountDirect(benchmark::State& state) {
  auto c = middle(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallelo::count_direct(c).v);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountDirect)->RangeMultiplier(10)->Range(1000, 1'000'000)->Complexity(benchmark::oN);

void BM_CountFormula(benchmark::State& state) {
  auto c = middle(state.range(0));
  auto sieve = parallelo::shared_sieves(c.a());
  for (auto _ : state) benchmark::DoNotOptimize(parallelo::count_formula(c, false, sieve.get()).v);
}
BENCHMARK(BM_CountFormula)->RangeMultiplier(10)->Range(1000, 100'000);

void BM_CountMobiusRatio(benchmark::State& state) {
  auto c = middle(state.range(0));
  auto sieve = parallelo::shared_sieves(c.a());
  for (auto _ : state) benchmark::DoNotOptimize(parallelo::count_mobius_ratio(c, sieve.get()).ratio);
}
BENCHMARK(BM_CountMobiusRatio)->RangeMultiplier(10)->Range(1000, 100'000)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallelo::profile(state.range(0)).size());
}
BENCHMARK(BM_Profile)->Arg(499)->Arg(2003)->Unit(benchmark::kMillisecond);

void BM_ConjectureScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallelo::conjecture_scan(5, state.range(0)).admissible);
}
BENCHMARK(BM_ConjectureScan)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
