#include <benchmark/benchmark.h>

#include "dnull/nullstellensatz.hpp"
#include "dnull/rgbound.hpp"

using namespace dnull;

static void BM_DecomposeEx3(benchmark::State& state) {
  DiffSystem sys = example_family({ExampleKind::ex3, static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(rgbound_decompose(sys).trace.size());
}
BENCHMARK(BM_DecomposeEx3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_DecomposeAndVerifyEx4(benchmark::State& state) {
  DiffSystem sys = example_family({ExampleKind::ex4, static_cast<unsigned>(state.range(0))});
  for (auto _ : state) {
    DecompositionResult res = rgbound_decompose(sys);
    benchmark::DoNotOptimize(verify_trace(res, sys).ok());
  }
}
BENCHMARK(BM_DecomposeAndVerifyEx4)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
