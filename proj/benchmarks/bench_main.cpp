#include <benchmark/benchmark.h>

#include "grent/combinatorics.hpp"
#include "grent/cycle_poly.hpp"
#include "grent/entropy.hpp"
#include "grent/roots.hpp"

using namespace grent;

static void BM_MaterializeSymmetric(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(materialize(GroupSpec::symmetric(n)));
}
BENCHMARK(BM_MaterializeSymmetric)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ClassTableSymmetric(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_table(GroupSpec::symmetric(n)));
}
BENCHMARK(BM_ClassTableSymmetric)->Arg(10)->Arg(30)->Arg(60);

static void BM_CyclePolynomial(benchmark::State& state) {
  const auto f = static_cast<Family>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cycle_polynomial(GroupSpec::named(f, 40)));
}
BENCHMARK(BM_CyclePolynomial)->DenseRange(0, 3);

static void BM_FindRootsSymmetric(benchmark::State& state) {
  auto p = rising_factorial_poly(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_FindRootsSymmetric)->Arg(8)->Arg(12)->Arg(30)->Unit(benchmark::kMicrosecond);

static void BM_FindRootsCyclicPrime(benchmark::State& state) {
  auto p = cycle_polynomial(GroupSpec::cyclic(101));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_FindRootsCyclicPrime)->Unit(benchmark::kMillisecond);

static void BM_MaxEntropyPartition(benchmark::State& state) {
  const auto total = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_entropy_partition(Family::Alternating, total, 4));
}
BENCHMARK(BM_MaxEntropyPartition)->Arg(16)->Arg(24)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_Harmonic(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic(n));
}
BENCHMARK(BM_Harmonic)->Arg(1000)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_ConvergenceProfile(benchmark::State& state) {
  PartitionSpec shape({2, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(convergence_profile(shape, {1, 10, 100, 1000}));
}
BENCHMARK(BM_ConvergenceProfile)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
