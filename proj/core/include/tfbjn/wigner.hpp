#pragma once

#include "tfbjn/grid.hpp"
#include "tfbjn/signal.hpp"

namespace tfbjn {

enum class DistKind { Wigner, Bjd, CrossWigner, CrossBjd };

/// Time-frequency distribution: axis1 = time (s), axis2 = frequency (Hz).
/// For single-source kinds (Wigner, Bjd) the values are real up to rounding.
struct TFDist {
  Grid2D grid;
  DistKind kind = DistKind::Wigner;
  int order = 0;       // n for Bjd / CrossBjd
  std::string source;  // optional id of the signal(s), set by callers
};

/// Ambiguity-plane grid: axis1 = zeta1 (s), axis2 = zeta2 (Hz).
/// The center bin holds the weighted squared l2 norm of the source.
struct AmbiguityGrid {
  Grid2D grid;
};

// Discrete Wigner convention: integer lags tau with zero extension,
//   W[k,m] = 2 dt sum_tau f[k+tau] conj(g[k-tau]) e^{-4pi i w_m tau dt},
// frequency bins w_m = (m - N/2) fs/(2N), i.e. half the DFT bin spacing over
// [-fs/4, fs/4). Alias-free for signals band-limited to half Nyquist.

TFDist cross_wigner(const Signal& f, const Signal& g);
TFDist wigner(const Signal& f);

/// Direct lag-sum ambiguity function A[j,m] on the grid dual to the Wigner
/// grid (zeta1 step 2dt, zeta2 step fs/N); equals symplectic_ft(wigner(f).grid).
AmbiguityGrid ambiguity(const Signal& f);

}  // namespace tfbjn
