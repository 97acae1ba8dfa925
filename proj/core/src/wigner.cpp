#include "tfbjn/wigner.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfbjn/parallel.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {
void require_shared_grid(const Signal& f, const Signal& g) {
  if (f.samples.size() != g.samples.size() || f.sample_rate != g.sample_rate || f.t0 != g.t0)
    throw std::invalid_argument("signals must share length, sample_rate and t0");
}
}  // namespace

TFDist cross_wigner(const Signal& f, const Signal& g) {
  validate(f);
  require_shared_grid(f, g);
  const std::size_t n = f.size();
  const double dt = f.dt();
  const double fs = f.sample_rate;

  Grid2D grid(n, n, Axis{f.t0, dt, "s"}, centered_axis(n, fs / (2.0 * static_cast<double>(n)), "Hz"));

  // Row k is the length-n DFT of v[tau] = f[k+tau] conj(g[k-tau]) (-1)^tau,
  // tau in [-L, L], L = min(k, n-1-k); negative lags wrap. The (-1)^tau folds
  // the half-spaced frequency grid into standard DFT bins.
  parallel_for(n, [&](std::size_t k) {
    std::vector<cplx> v(n, cplx{0.0, 0.0});
    std::size_t L = std::min(k, n - 1 - k);
    for (std::size_t t = 0; t <= L; ++t) {
      cplx a = f.samples[k + t] * std::conj(g.samples[k - t]);
      double sgn = (t & 1) ? -1.0 : 1.0;
      v[t] = a * sgn;
      if (t > 0) {
        cplx b = f.samples[k - t] * std::conj(g.samples[k + t]);
        v[n - t] = b * sgn;
      }
    }
    detail::fft_pow2(v.data(), n, false);
    cplx* out = grid.row(k);
    for (std::size_t m = 0; m < n; ++m) out[m] = 2.0 * dt * v[m];
  });

  TFDist d;
  d.grid = std::move(grid);
  d.kind = DistKind::CrossWigner;
  return d;
}

TFDist wigner(const Signal& f) {
  TFDist d = cross_wigner(f, f);
  d.kind = DistKind::Wigner;
  return d;
}

AmbiguityGrid ambiguity(const Signal& f) {
  validate(f);
  const std::size_t n = f.size();
  const double dt = f.dt();
  const double fs = f.sample_rate;

  Grid2D grid(n, n, centered_axis(n, 2.0 * dt, "s"),
              centered_axis(n, fs / static_cast<double>(n), "Hz"));

  // y runs over the centered grid; for signals with a shifted t0 this is the
  // ambiguity function of the recentered signal (the Q^n pipeline inverts
  // with the same convention, so distributions are unaffected)
  parallel_for(n, [&](std::size_t j) {
    long tau = static_cast<long>(j) - static_cast<long>(n / 2);
    std::vector<cplx> w(n, cplx{0.0, 0.0});
    for (long l = 0; l < static_cast<long>(n); ++l) {
      long a = l + tau, b = l - tau;
      if (a >= 0 && a < static_cast<long>(n) && b >= 0 && b < static_cast<long>(n))
        w[static_cast<std::size_t>(l)] =
            f.samples[static_cast<std::size_t>(a)] * std::conj(f.samples[static_cast<std::size_t>(b)]);
    }
    auto line = fft_centered(w, dt);
    std::copy(line.values.begin(), line.values.end(), grid.row(j));
  });

  return AmbiguityGrid{std::move(grid)};
}

}  // namespace tfbjn
