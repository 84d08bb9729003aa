#include <benchmark/benchmark.h>

#include "dnull/dickson.hpp"

using namespace dnull;

static void BM_SearchUnitGrowth(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::int64_t m = state.range(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_max_length(n, GrowthFn::affine(1, m - 1), 64, true).length);
}
BENCHMARK(BM_SearchUnitGrowth)->Args({1, 3})->Args({2, 1})->Args({2, 2});

static void BM_PadConstruction(benchmark::State& state) {
  GrowthFn f = GrowthFn::table({3, 6, 8});
  TupleSeq seq{{3}, {1}, {0}};
  for (auto _ : state) benchmark::DoNotOptimize(pad_construction(seq, f, 2).size());
}
BENCHMARK(BM_PadConstruction);
