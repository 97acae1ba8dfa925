#include <benchmark/benchmark.h>

#include <random>

#include "tfbjn/spectral.hpp"

using namespace tfbjn;

namespace {

std::vector<cplx> random_line(std::size_t n) {
  std::mt19937 rng(1);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

Grid2D random_grid(std::size_t n) {
  std::mt19937 rng(2);
  std::normal_distribution<double> d(0.0, 1.0);
  Grid2D g(n, n, centered_axis(n, 0.25), centered_axis(n, 0.25));
  for (auto& v : g.values()) v = {d(rng), d(rng)};
  return g;
}

}  // namespace

static void BM_FftCentered(benchmark::State& state) {
  auto v = random_line(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto line = fft_centered(v, 0.125);
    benchmark::DoNotOptimize(line.values.data());
  }
}
BENCHMARK(BM_FftCentered)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_SymplecticFt(benchmark::State& state) {
  Grid2D g = random_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Grid2D out = symplectic_ft(g);
    benchmark::DoNotOptimize(out.values().data());
  }
}
BENCHMARK(BM_SymplecticFt)->Arg(128)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
