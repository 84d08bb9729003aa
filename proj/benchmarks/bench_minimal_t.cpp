#include <benchmark/benchmark.h>

#include "dnull/nullstellensatz.hpp"

using namespace dnull;

static void BM_MinimalTEx1(benchmark::State& state) {
  unsigned k = static_cast<unsigned>(state.range(0));
  DiffSystem sys = example_family({ExampleKind::ex1, k});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_t(sys, k).t);
}
BENCHMARK(BM_MinimalTEx1)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MinimalTEx3(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  DiffSystem sys = example_family({ExampleKind::ex3, n});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_t(sys, 1u << n).t);
}
BENCHMARK(BM_MinimalTEx3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
