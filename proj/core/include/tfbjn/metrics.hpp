#pragma once

#include "tfbjn/signal.hpp"
#include "tfbjn/wigner.hpp"

namespace tfbjn {

struct MarginalPair {
  std::vector<double> time_marginal;  // sum over frequency * df
  std::vector<double> freq_marginal;  // sum over time * dt
};

/// Riemann marginals of an auto-distribution (kind Wigner or Bjd only).
MarginalPair marginals(const TFDist& d);

struct MarginalError {
  double time_l1_rel = 0.0;
  double freq_l1_rel = 0.0;
};

/// Relative l1 distance of the marginals of d from the references |f(t)|^2
/// and |fhat(w)|^2 (the latter from the zero-padded transform of f on the
/// half-spaced frequency bins of d).
MarginalError marginal_error(const TFDist& d, const Signal& f);

/// |<Q,Q> - <f,f><g,g>| / (<f,f><g,g>) with Q = Q^n(f,g) and weighted inner
/// products. Zero for the Wigner case on well-sampled signals; strictly
/// positive for n >= 1.
double moyal_defect(const Signal& f, const Signal& g, int n);

struct TFBox {
  double t_lo = 0, t_hi = 0, f_lo = 0, f_hi = 0;
};

/// sum |values|^2 dt df over the box (bounds inclusive).
double cross_term_energy(const TFDist& d, const TFBox& box);

/// Least-squares slope of log max|F(windowed d)| against log radius over
/// dyadic bin annuli restricted to the cone of half-angle `cone_halfangle`
/// about (dir1, dir2) (antipodes included). Window: separable raised cosine
/// over the central 75% of each axis. Annuli below 1e-13 of the peak are
/// dropped; fewer than 3 usable annuli raises InsufficientDataError.
double directional_decay(const TFDist& d, double dir1, double dir2, double cone_halfangle);

/// (sum|v|)^2 / (n_cells * sum|v|^2), in (0, 1]; lower = more concentrated.
double concentration(const TFDist& d);

}  // namespace tfbjn
