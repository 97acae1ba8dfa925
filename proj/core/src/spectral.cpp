#include "tfbjn/spectral.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "tfbjn/parallel.hpp"

namespace tfbjn {

namespace detail {

namespace {
// Twiddle tables per transform size, forward sign. Angles are computed per
// index (not accumulated) so every butterfly sees the same value on every run.
const std::vector<cplx>& twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::vector<cplx>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(n, std::move(w)).first->second;
}
}  // namespace

void fft_pow2(cplx* a, std::size_t n, bool inverse) {
  if (n < 2) return;
  // bit reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace detail

namespace {

// Centered transform = diag(parity) . FFT . diag(parity) . step, with the
// parity signs exact (no trig): e^{i pi (a - N/2)} = +-1 on even grids.
void centered_transform(std::span<const cplx> v, double step, bool inverse, std::vector<cplx>& out) {
  std::size_t n = v.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_centered: length must be a power of two >= 2");
  out.assign(v.begin(), v.end());
  for (std::size_t k = 1; k < n; k += 2) out[k] = -out[k];
  detail::fft_pow2(out.data(), n, inverse);
  std::size_t half = n / 2;
  for (std::size_t a = 0; a < n; ++a) {
    double s = (((a + half) & 1) ? -step : step);
    out[a] *= s;
  }
}

std::string dual_unit(const std::string& u) {
  if (u == "s") return "Hz";
  if (u == "Hz") return "s";
  return {};
}

Axis dual_axis(const Axis& ax, std::size_t n) {
  return centered_axis(n, 1.0 / (static_cast<double>(n) * ax.step), dual_unit(ax.unit));
}

}  // namespace

SpectrumLine fft_centered(std::span<const cplx> v, double step) {
  SpectrumLine r;
  centered_transform(v, step, false, r.values);
  r.dual_step = 1.0 / (static_cast<double>(v.size()) * step);
  return r;
}

SpectrumLine ifft_centered(std::span<const cplx> v, double step) {
  SpectrumLine r;
  centered_transform(v, step, true, r.values);
  r.dual_step = 1.0 / (static_cast<double>(v.size()) * step);
  return r;
}

Grid2D fft2_centered(const Grid2D& g) {
  std::size_t n1 = g.rows(), n2 = g.cols();
  Grid2D out(n1, n2, dual_axis(g.axis1(), n1), dual_axis(g.axis2(), n2));

  // transform along axis2 (rows), then axis1 (columns)
  Grid2D tmp = g;
  parallel_for(n1, [&](std::size_t i) {
    std::vector<cplx> line;
    centered_transform(std::span<const cplx>(tmp.row(i), n2), g.axis2().step, false, line);
    std::copy(line.begin(), line.end(), tmp.row(i));
  });
  parallel_for(n2, [&](std::size_t j) {
    std::vector<cplx> col(n1), line;
    for (std::size_t i = 0; i < n1; ++i) col[i] = tmp(i, j);
    centered_transform(col, g.axis1().step, false, line);
    for (std::size_t i = 0; i < n1; ++i) out(i, j) = line[i];
  });
  return out;
}

Grid2D symplectic_ft(const Grid2D& g) {
  Grid2D G = fft2_centered(g);
  std::size_t n1 = G.rows(), n2 = G.cols();
  // O[j,c] = G[c, (n2-j) mod n2]: zeta1 runs over the reflected second dual
  // axis, zeta2 over the first. The extreme bin reflects onto itself.
  Grid2D out(n2, n1, G.axis2(), G.axis1());
  parallel_for(n2, [&](std::size_t j) {
    std::size_t b = (n2 - j) % n2;
    for (std::size_t c = 0; c < n1; ++c) out(j, c) = G(c, b);
  });
  return out;
}

Grid2D isymplectic_ft(const Grid2D& g) { return symplectic_ft(g); }

}  // namespace tfbjn
