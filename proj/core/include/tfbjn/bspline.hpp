#pragma once

#include <cstddef>

#include "tfbjn/exact.hpp"

namespace tfbjn {

/// Cardinal B-spline of order n as exact piecewise polynomials on [-n/2, n/2],
/// knots one apart. Coefficients are rationals in the global variable t.
struct BSpline {
  struct Piece {
    Rational lo, hi;
    std::vector<Rational> coeffs;  // c0 + c1 t + c2 t^2 + ...
  };

  int order = 0;
  std::vector<Piece> pieces;

  /// Exact evaluation; at interior knots returns the half-sum of the two
  /// adjacent pieces (the Fourier-inversion value; B_1(+-1/2) = 1/2).
  Rational eval_exact(const Rational& t) const;

  /// eval_exact after exact double -> rational conversion.
  double operator()(double t) const;

  /// Exact integral over the support (equals 1 for every order).
  Rational integral() const;
};

/// Builds B_n by symbolic integration of B_{n+1}(t) = I_n(t+1/2) - I_n(t-1/2),
/// starting from the unit box B_1 = chi_[-1/2,1/2].
BSpline bspline_build(int n);

/// Samples B_n on a midpoint-offset time grid over [-half_range, half_range),
/// transforms with the exact offset phase, and returns the maximum absolute
/// deviation from sinc^n on the central half of the frequency axis.
double bspline_fourier_check(int n, std::size_t n_samples = 4096, double half_range = 8.0);

}  // namespace tfbjn
