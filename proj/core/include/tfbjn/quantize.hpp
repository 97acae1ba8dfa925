#pragma once

#include <string>

#include "tfbjn/exact.hpp"
#include "tfbjn/grid.hpp"

namespace tfbjn {

/// Exact ordering coefficients for the monomial w^m x^l under the order-n
/// rule: Op(w^m x^l) = sum_j c_j what^{m-j} xhat^{l-j} with
/// c_j = coeffs[j] * pi^{-j} (the rational part absorbs the 2^{-j}).
/// coeffs[0] == 1 always.
struct CoeffTable {
  int m = 0, l = 0, n = 0;
  std::vector<GaussRational> coeffs;
};

CoeffTable monomial_coeffs(int m, int l, int n);

/// JSON with exact numerator/denominator strings:
/// {"m":..,"l":..,"n":..,"coeffs":[{"j":..,"re_num":"..","re_den":"..",
///  "im_num":"..","im_den":"..","pi_power":-j},..]}
std::string coeff_table_to_json(const CoeffTable& t);

enum class SymbolTag { WeylSymbol, BjSymbol };

/// Phase-space symbol sampled twice-dense in x (2N bins, step dx/2) and on the
/// full band in omega (N bins, step fs/N), so operator-kernel midpoints fall
/// on grid points.
struct SymbolGrid {
  Grid2D grid;
  SymbolTag tag = SymbolTag::WeylSymbol;
  int order = 0;
};

/// Zero-valued symbol grid matching length-n_signal signals at sample_rate.
SymbolGrid make_symbol_grid(std::size_t n_signal, double sample_rate);

/// Dense realization on length-N sample vectors; Riemann weights are folded
/// in, so apply() is a plain matrix-vector product and Op(1) == identity.
struct OperatorMatrix {
  enum class Provenance { Weyl, Bj, WeakForm };

  std::size_t dim = 0;
  std::vector<cplx> entries;  // row-major dim x dim
  Provenance provenance = Provenance::Weyl;

  cplx& at(std::size_t j, std::size_t k) { return entries[j * dim + k]; }
  const cplx& at(std::size_t j, std::size_t k) const { return entries[j * dim + k]; }
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
};

/// Weyl operator via the integral kernel K(x,y) = int a((x+y)/2, w) e^{2pi i (x-y) w} dw.
OperatorMatrix weyl_quantize(const SymbolGrid& a);

/// Weyl symbol of the order-n operator with symbol a:
/// F_sigma^{-1}(Theta^n . F_sigma a). n = 0 returns a unchanged.
SymbolGrid bj_symbol_to_weyl(const SymbolGrid& a, int n);

OperatorMatrix bj_quantize(const SymbolGrid& a, int n);

/// Weak-form assembly: M[j,k] = <a, Q^n(e_j, e_k)> / dx with the basis-vector
/// cross-distributions evaluated on the operator midpoint lattice. O(N^4);
/// guarded at N <= 64. Must match bj_quantize up to transform rounding.
OperatorMatrix bj_quantize_weak(const SymbolGrid& a, int n);

}  // namespace tfbjn
