#include <benchmark/benchmark.h>

#include "dnull/groebner.hpp"

using namespace dnull;

namespace {

// Cyclic-style quadrics v_i v_{i+1} - v_{i+2}^2 + i in k variables.
std::vector<Poly> quadrics(const RingPtr& R, int k) {
  std::vector<Poly> v, F;
  for (int i = 0; i < k; ++i) v.push_back(Poly::variable(R, R->add_variable("v" + std::to_string(i))));
  for (int i = 0; i < k; ++i)
    F.push_back(v[i] * v[(i + 1) % k] - v[(i + 2) % k].pow(2) + Poly::constant(R, Coeff(i)));
  return F;
}

}  // namespace

static void BM_Buchberger(benchmark::State& state) {
  for (auto _ : state) {
    RingPtr R = PolyRing::create(FieldKind::Q);
    auto F = quadrics(R, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(buchberger(F).generators.size());
  }
}
BENCHMARK(BM_Buchberger)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
