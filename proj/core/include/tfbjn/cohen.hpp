#pragma once

#include "tfbjn/signal.hpp"
#include "tfbjn/wigner.hpp"

namespace tfbjn {

/// Born-Jordan distribution of order n, computed in the ambiguity domain:
/// Q^n f = F_sigma^{-1}(Theta^n . A f). n = 0 reproduces the Wigner distribution.
TFDist bjd(const Signal& f, int n);

/// Cross-distribution Q^n(f,g) = F_sigma^{-1}(Theta^n . F_sigma W(f,g));
/// conjugate-symmetric under swapping f and g.
TFDist cross_bjd(const Signal& f, const Signal& g, int n);

/// The 2n-th order mixed derivative content of Q^n f, realized in the dual
/// domain as F_sigma^{-1}(sin^n(pi z1 z2)/pi^n . A f); its weighted l2 norm is
/// bounded by pi^{-n} ||A f||.
Grid2D mixed_derivative_check(const Signal& f, int n);

}  // namespace tfbjn
