#pragma once

#include "tfbjn/exact.hpp"
#include "tfbjn/grid.hpp"

namespace tfbjn {

// Two sinc conventions coexist on purpose and are named apart:
//   sinc(x)   = sin(pi x)/(pi x)   -- kernels and distributions
//   sinc_u(u) = sin(u)/u           -- the ordering-coefficient derivatives,
// whose even derivatives at 0 are (-1)^m/(2m+1).

/// Normalized sinc, removable singularity handled by a series for |x| < 1e-4.
double sinc(double x);

/// Unnormalized sinc sin(u)/u.
double sinc_u(double u);

/// Integer power by repeated squaring; ipow(x, 0) == 1 exactly.
double ipow(double x, int n);

/// Cohen kernel of order n on an ambiguity grid: values sinc(z1*z2)^n.
struct KernelGrid {
  int order = 0;
  Grid2D grid;
};

/// Samples sinc^n(z1*z2) over the two axes (z1 in s, z2 in Hz); n >= 0.
KernelGrid theta_n(const Axis& zeta1, std::size_t n1, const Axis& zeta2, std::size_t n2, int n);

/// d^k/du^k sinc_u^n at u = 0 for k = 0..k_max, via Faa di Bruno over the
/// multi-indices alpha with sum j*alpha_j = k, |alpha| <= n. Exact; odd k are 0.
std::vector<Rational> sinc_pow_derivs_faa(int n, int k_max);

/// Same values from the truncated power series of sinc_u multiplied out n
/// times (independent route; must agree with the Faa di Bruno table exactly).
std::vector<Rational> sinc_pow_derivs_series(int n, int k_max);

/// Derivatives at 0 of f(t) = e^{it/2} sinc_u^n(t/2), by the Leibniz rule:
/// f_j = sum_k C(j,k) (i/2)^{j-k} (1/2)^k (d^k sinc_u^n)(0). f_0 = 1.
/// n=0 gives (i/2)^j, n=1 gives i^j/(j+1).
struct SincDerivTable {
  int order = 0;
  std::vector<GaussRational> values;
};
SincDerivTable phi_derivs(int n, int k_max);

}  // namespace tfbjn
