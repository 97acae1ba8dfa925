#pragma once

#include <span>

#include "tfbjn/grid.hpp"

namespace tfbjn {

// Sign convention: forward transforms carry e^{-2pi i}. All grids are centered
// (bin n/2 holds coordinate 0); the dual of an axis with n bins and step s is
// the centered axis with step 1/(n*s).

struct SpectrumLine {
  std::vector<cplx> values;
  double dual_step;
};

/// Riemann-weighted Fourier transform on a centered grid:
///   F[a] = step * sum_k v[k] e^{-2pi i x_k u_a},  x_k=(k-N/2)step, u_a=(a-N/2)/(N step).
/// N must be a power of two.
SpectrumLine fft_centered(std::span<const cplx> v, double step);

/// Inverse of fft_centered (kernel e^{+2pi i}, same weighting).
SpectrumLine ifft_centered(std::span<const cplx> v, double step);

/// 2D centered transform of both axes; axis units flip s <-> Hz.
Grid2D fft2_centered(const Grid2D& g);

/// Symplectic Fourier transform F_sigma F(z1,z2) = F F(z2, -z1):
/// 2D centered transform followed by the J-reindexing (wraparound reflection
/// on the first output axis). An involution; output dims are transposed.
Grid2D symplectic_ft(const Grid2D& g);

/// Alias of symplectic_ft kept for call-site clarity (the transform is its own inverse).
Grid2D isymplectic_ft(const Grid2D& g);

namespace detail {
/// In-place radix-2 FFT, no normalization, fixed summation order.
void fft_pow2(cplx* a, std::size_t n, bool inverse);
}

}  // namespace tfbjn
