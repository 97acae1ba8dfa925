#include "tfbjn/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfbjn/kernels.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational r(0);
  for (std::size_t p = c.size(); p-- > 0;) r = r * x + c[p];
  return r;
}

/// Antiderivative of the piecewise polynomial, continuous, zero at the left
/// end of the support.
std::vector<BSpline::Piece> integrate(const std::vector<BSpline::Piece>& ps) {
  std::vector<BSpline::Piece> out;
  out.reserve(ps.size());
  Rational acc(0);
  for (const auto& p : ps) {
    std::vector<Rational> C(p.coeffs.size() + 1, Rational(0));
    for (std::size_t q = 0; q < p.coeffs.size(); ++q) C[q + 1] = p.coeffs[q] / Rational(q + 1);
    C[0] = acc - eval_poly(C, p.lo);
    acc = eval_poly(C, p.hi);
    out.push_back({p.lo, p.hi, std::move(C)});
  }
  return out;
}

/// p(t + s) expanded in t.
std::vector<Rational> shift_poly(const std::vector<Rational>& c, const Rational& s) {
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    Rational spow(1);
    for (std::size_t q = p + 1; q-- > 0;) {
      out[q] += c[p] * Rational(binomial(static_cast<unsigned>(p), static_cast<unsigned>(q))) * spow;
      spow *= s;
    }
  }
  return out;
}

/// Polynomial of I(t + shift) valid on an interval whose midpoint is mid.
std::vector<Rational> antider_shifted(const std::vector<BSpline::Piece>& I, const Rational& mid,
                                      const Rational& shift, const Rational& total) {
  Rational y = mid + shift;
  if (y <= I.front().lo) return {Rational(0)};
  if (y >= I.back().hi) return {total};
  for (const auto& p : I)
    if (p.lo <= y && y < p.hi) return shift_poly(p.coeffs, shift);
  return {Rational(0)};
}

}  // namespace

Rational BSpline::eval_exact(const Rational& t) const {
  if (pieces.empty() || t < pieces.front().lo || t > pieces.back().hi) return Rational(0);
  // knot hit: average the one-sided limits (0 outside the support)
  for (std::size_t i = 0; i <= pieces.size(); ++i) {
    const Rational& knot = (i < pieces.size()) ? pieces[i].lo : pieces.back().hi;
    if (t == knot) {
      Rational left = (i > 0) ? eval_poly(pieces[i - 1].coeffs, t) : Rational(0);
      Rational right = (i < pieces.size()) ? eval_poly(pieces[i].coeffs, t) : Rational(0);
      return (left + right) / Rational(2);
    }
  }
  for (const auto& p : pieces)
    if (p.lo < t && t < p.hi) return eval_poly(p.coeffs, t);
  return Rational(0);
}

double BSpline::operator()(double t) const {
  return eval_exact(Rational(t)).convert_to<double>();
}

Rational BSpline::integral() const {
  Rational acc(0);
  for (const auto& p : pieces) {
    std::vector<Rational> C(p.coeffs.size() + 1, Rational(0));
    for (std::size_t q = 0; q < p.coeffs.size(); ++q) C[q + 1] = p.coeffs[q] / Rational(q + 1);
    acc += eval_poly(C, p.hi) - eval_poly(C, p.lo);
  }
  return acc;
}

BSpline bspline_build(int n) {
  if (n < 1) throw std::invalid_argument("bspline_build: order must be >= 1");
  BSpline b;
  b.order = 1;
  b.pieces = {{Rational(-1, 2), Rational(1, 2), {Rational(1)}}};
  const Rational half(1, 2);
  for (int ord = 2; ord <= n; ++ord) {
    auto I = integrate(b.pieces);
    Rational total = eval_poly(I.back().coeffs, I.back().hi);
    // new knots: old ones shifted by -1/2 and +1/2
    std::vector<Rational> knots;
    for (const auto& p : b.pieces) {
      knots.push_back(p.lo - half);
      knots.push_back(p.lo + half);
    }
    knots.push_back(b.pieces.back().hi - half);
    knots.push_back(b.pieces.back().hi + half);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::vector<BSpline::Piece> next;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      Rational mid = (knots[i] + knots[i + 1]) / Rational(2);
      auto cp = antider_shifted(I, mid, half, total);
      auto cm = antider_shifted(I, mid, -half, total);
      std::size_t len = std::max(cp.size(), cm.size());
      std::vector<Rational> c(len, Rational(0));
      for (std::size_t q = 0; q < len; ++q) {
        if (q < cp.size()) c[q] += cp[q];
        if (q < cm.size()) c[q] -= cm[q];
      }
      next.push_back({knots[i], knots[i + 1], std::move(c)});
    }
    b.pieces = std::move(next);
    b.order = ord;
  }
  return b;
}

double bspline_fourier_check(int n, std::size_t n_samples, double half_range) {
  if (n < 1) throw std::invalid_argument("bspline_fourier_check: order must be >= 1");
  BSpline b = bspline_build(n);
  const double step = 2.0 * half_range / static_cast<double>(n_samples);
  // midpoint-offset samples keep the knots of B_n between grid points
  std::vector<cplx> v(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    double t = (static_cast<double>(k) - static_cast<double>(n_samples / 2) + 0.5) * step;
    v[k] = b(t);
  }
  auto line = fft_centered(v, step);
  double max_err = 0.0;
  const double pi = std::numbers::pi;
  for (std::size_t a = 0; a < n_samples; ++a) {
    double xi = (static_cast<double>(a) - static_cast<double>(n_samples / 2)) * line.dual_step;
    if (std::abs(xi) >= 1.0 / (4.0 * step)) continue;  // central half of the axis
    cplx F = line.values[a] * std::polar(1.0, -pi * xi * step);  // half-step offset phase
    double err = std::abs(F - cplx(ipow(sinc(xi), n), 0.0));
    if (err > max_err) max_err = err;
  }
  return max_err;
}

}  // namespace tfbjn
