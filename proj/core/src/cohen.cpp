#include "tfbjn/cohen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfbjn/kernels.hpp"
#include "tfbjn/parallel.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {

Grid2D apply_kernel(Grid2D amb, int n) {
  KernelGrid th = theta_n(amb.axis1(), amb.rows(), amb.axis2(), amb.cols(), n);
  for (std::size_t i = 0; i < amb.rows(); ++i) {
    cplx* a = amb.row(i);
    const cplx* t = th.grid.row(i);
    for (std::size_t j = 0; j < amb.cols(); ++j) a[j] *= t[j].real();
  }
  return amb;
}

}  // namespace

TFDist bjd(const Signal& f, int n) {
  if (n < 0) throw std::invalid_argument("bjd: order must be >= 0");
  AmbiguityGrid a = ambiguity(f);
  TFDist d;
  d.grid = isymplectic_ft(apply_kernel(std::move(a.grid), n));
  d.kind = DistKind::Bjd;
  d.order = n;
  return d;
}

TFDist cross_bjd(const Signal& f, const Signal& g, int n) {
  if (n < 0) throw std::invalid_argument("cross_bjd: order must be >= 0");
  TFDist w = cross_wigner(f, g);
  Grid2D amb = symplectic_ft(w.grid);
  TFDist d;
  d.grid = isymplectic_ft(apply_kernel(std::move(amb), n));
  d.kind = DistKind::CrossBjd;
  d.order = n;
  return d;
}

Grid2D mixed_derivative_check(const Signal& f, int n) {
  if (n < 1) throw std::invalid_argument("mixed_derivative_check: order must be >= 1");
  AmbiguityGrid a = ambiguity(f);
  Grid2D& amb = a.grid;
  const double pi = std::numbers::pi;
  parallel_for(amb.rows(), [&](std::size_t i) {
    double z1 = amb.axis1().value(i);
    cplx* row = amb.row(i);
    for (std::size_t j = 0; j < amb.cols(); ++j) {
      double s = std::sin(pi * z1 * amb.axis2().value(j)) / pi;
      row[j] *= ipow(s, n);
    }
  });
  return isymplectic_ft(amb);
}

}  // namespace tfbjn
