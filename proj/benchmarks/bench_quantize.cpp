#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "tfbjn/quantize.hpp"

using namespace tfbjn;

namespace {
SymbolGrid gaussian_symbol(std::size_t n, double fs) {
  SymbolGrid s = make_symbol_grid(n, fs);
  const double xw = static_cast<double>(n) / fs / 4.0, ww = fs / 4.0;
  for (std::size_t r = 0; r < s.grid.rows(); ++r)
    for (std::size_t m = 0; m < s.grid.cols(); ++m) {
      double x = s.grid.axis1().value(r), w = s.grid.axis2().value(m);
      s.grid(r, m) = std::exp(-std::numbers::pi * ((x / xw) * (x / xw) + (w / ww) * (w / ww)));
    }
  return s;
}
}  // namespace

static void BM_WeylQuantize(benchmark::State& state) {
  SymbolGrid a = gaussian_symbol(static_cast<std::size_t>(state.range(0)), 8.0);
  for (auto _ : state) {
    OperatorMatrix m = weyl_quantize(a);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_WeylQuantize)->Arg(32)->Arg(64)->Arg(128);

static void BM_BjQuantizeWeak(benchmark::State& state) {
  SymbolGrid a = gaussian_symbol(static_cast<std::size_t>(state.range(0)), 8.0);
  for (auto _ : state) {
    OperatorMatrix m = bj_quantize_weak(a, 1);
    benchmark::DoNotOptimize(m.entries.data());
  }
}
BENCHMARK(BM_BjQuantizeWeak)->Arg(16)->Arg(32);

static void BM_MonomialCoeffs(benchmark::State& state) {
  for (auto _ : state) {
    CoeffTable t = monomial_coeffs(8, 8, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.coeffs.data());
  }
}
BENCHMARK(BM_MonomialCoeffs)->Arg(1)->Arg(4)->Arg(8);
