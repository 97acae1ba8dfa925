#include "tfbjn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfbjn/cohen.hpp"
#include "tfbjn/errors.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {
constexpr double pi = std::numbers::pi;

double weighted_sq_norm(const Grid2D& g) {
  double acc = 0.0;
  for (const auto& v : g.values()) acc += std::norm(v);
  return acc * g.axis1().step * g.axis2().step;
}
}  // namespace

MarginalPair marginals(const TFDist& d) {
  if (d.kind != DistKind::Wigner && d.kind != DistKind::Bjd)
    throw std::invalid_argument("marginals: auto-distributions only");
  const Grid2D& g = d.grid;
  MarginalPair out;
  out.time_marginal.assign(g.rows(), 0.0);
  out.freq_marginal.assign(g.cols(), 0.0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const cplx* row = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out.time_marginal[i] += row[j].real();
      out.freq_marginal[j] += row[j].real();
    }
  }
  for (auto& v : out.time_marginal) v *= g.axis2().step;
  for (auto& v : out.freq_marginal) v *= g.axis1().step;
  return out;
}

MarginalError marginal_error(const TFDist& d, const Signal& f) {
  MarginalPair m = marginals(d);
  const std::size_t n = f.size();
  if (m.time_marginal.size() != n || m.freq_marginal.size() != n)
    throw std::invalid_argument("marginal_error: distribution does not match the signal grid");

  // |fhat|^2 on the half-spaced bins: transform the signal zero-padded to 2N
  std::vector<cplx> padded(2 * n, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) padded[k + n / 2] = f.samples[k];
  auto spec = fft_centered(padded, f.dt());

  double et = 0.0, rt = 0.0, ef = 0.0, rf = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double tref = std::norm(f.samples[k]);
    et += std::abs(m.time_marginal[k] - tref);
    rt += std::abs(tref);
    double fref = std::norm(spec.values[k + n / 2]);
    ef += std::abs(m.freq_marginal[k] - fref);
    rf += std::abs(fref);
  }
  if (rt == 0.0 || rf == 0.0) throw UndefinedRatioError("marginal_error: zero signal");
  return MarginalError{et / rt, ef / rf};
}

double moyal_defect(const Signal& f, const Signal& g, int n) {
  double nf = energy(f), ng = energy(g);
  if (nf == 0.0 || ng == 0.0) throw UndefinedRatioError("moyal_defect: zero signal");
  TFDist q = cross_bjd(f, g, n);
  double q2 = weighted_sq_norm(q.grid);
  return std::abs(q2 - nf * ng) / (nf * ng);
}

double cross_term_energy(const TFDist& d, const TFBox& box) {
  const Grid2D& g = d.grid;
  double acc = 0.0;
  bool hit = false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    double t = g.axis1().value(i);
    if (t < box.t_lo || t > box.t_hi) continue;
    const cplx* row = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      double w = g.axis2().value(j);
      if (w < box.f_lo || w > box.f_hi) continue;
      acc += std::norm(row[j]);
      hit = true;
    }
  }
  if (!hit) throw std::invalid_argument("cross_term_energy: box contains no grid cells");
  return acc * g.axis1().step * g.axis2().step;
}

namespace {
std::vector<double> raised_cosine(std::size_t n, double frac = 0.75) {
  std::vector<double> w(n, 0.0);
  double half = frac * static_cast<double>(n) / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = (static_cast<double>(i) - static_cast<double>(n / 2)) / half;
    if (std::abs(u) < 1.0) w[i] = 0.5 * (1.0 + std::cos(pi * u));
  }
  return w;
}
}  // namespace

double directional_decay(const TFDist& d, double dir1, double dir2, double cone_halfangle) {
  double dn = std::hypot(dir1, dir2);
  if (dn == 0.0) throw std::invalid_argument("directional_decay: direction must be nonzero");
  dir1 /= dn;
  dir2 /= dn;
  const Grid2D& g = d.grid;
  const std::size_t n1 = g.rows(), n2 = g.cols();

  Grid2D win(n1, n2, g.axis1(), g.axis2());
  auto w1 = raised_cosine(n1), w2 = raised_cosine(n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) win(i, j) = w1[i] * w2[j] * g(i, j).real();
  Grid2D F = fft2_centered(win);

  double peak = 0.0;
  for (const auto& v : F.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw UndefinedRatioError("directional_decay: zero grid");

  const double cos_half = std::cos(cone_halfangle);

  std::vector<double> lx, ly;
  for (std::size_t s = 2; (std::size_t(1) << (s + 1)) <= std::min(n1, n2) / 2; ++s) {
    double r_lo = static_cast<double>(std::size_t(1) << s);
    double r_hi = 2.0 * r_lo;
    double best = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
      double u = static_cast<double>(i) - static_cast<double>(n1 / 2);
      for (std::size_t j = 0; j < n2; ++j) {
        double v = static_cast<double>(j) - static_cast<double>(n2 / 2);
        double rho = std::hypot(u, v);
        if (rho < r_lo || rho >= r_hi) continue;
        if (std::abs(u * dir1 + v * dir2) / rho < cos_half) continue;
        best = std::max(best, std::abs(F(i, j)));
      }
    }
    if (best > 1e-13 * peak) {
      lx.push_back(std::log(std::sqrt(r_lo * r_hi)));
      ly.push_back(std::log(best));
    }
  }
  if (lx.size() < 3)
    throw InsufficientDataError("directional_decay: fewer than 3 usable annuli");

  // least squares slope
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double c = static_cast<double>(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (c * sxy - sx * sy) / (c * sxx - sx * sx);
}

double concentration(const TFDist& d) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& v : d.grid.values()) {
    double a = std::abs(v);
    s1 += a;
    s2 += a * a;
  }
  if (s2 == 0.0) throw UndefinedRatioError("concentration: zero grid");
  return (s1 * s1) / (static_cast<double>(d.grid.values().size()) * s2);
}

}  // namespace tfbjn
