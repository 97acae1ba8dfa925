#include <benchmark/benchmark.h>

#include "tfbjn/cohen.hpp"
#include "tfbjn/metrics.hpp"
#include "tfbjn/presets.hpp"
#include "tfbjn/wigner.hpp"

using namespace tfbjn;

static void BM_Wigner(benchmark::State& state) {
  Signal f = make_preset("two-gaussians", static_cast<std::size_t>(state.range(0)), 32.0);
  for (auto _ : state) {
    TFDist d = wigner(f);
    benchmark::DoNotOptimize(d.grid.values().data());
  }
}
BENCHMARK(BM_Wigner)->Arg(256)->Arg(512);

static void BM_Ambiguity(benchmark::State& state) {
  Signal f = make_preset("two-chirps", static_cast<std::size_t>(state.range(0)), 32.0);
  for (auto _ : state) {
    AmbiguityGrid a = ambiguity(f);
    benchmark::DoNotOptimize(a.grid.values().data());
  }
}
BENCHMARK(BM_Ambiguity)->Arg(256)->Arg(512);

static void BM_Bjd(benchmark::State& state) {
  Signal f = make_preset("two-gaussians", 512, 32.0);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TFDist d = bjd(f, n);
    benchmark::DoNotOptimize(d.grid.values().data());
  }
}
BENCHMARK(BM_Bjd)->Arg(1)->Arg(10)->Arg(100);

static void BM_MoyalDefect(benchmark::State& state) {
  Signal f = make_preset("two-gaussians", 256, 32.0);
  for (auto _ : state) benchmark::DoNotOptimize(moyal_defect(f, f, 1));
}
BENCHMARK(BM_MoyalDefect);

static void BM_DirectionalDecay(benchmark::State& state) {
  Signal f = make_preset("two-gaussians", 512, 32.0);
  TFDist d = bjd(f, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(directional_decay(d, 1.0, 1.0, 0.39269908169872414));
}
BENCHMARK(BM_DirectionalDecay);
