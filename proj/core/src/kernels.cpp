#include "tfbjn/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfbjn/parallel.hpp"

namespace tfbjn {

namespace {
constexpr double pi = std::numbers::pi;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

GaussRational i_pow(unsigned p) {
  switch (p % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

std::complex<double> to_complex(const GaussRational& g) {
  return {g.re.convert_to<double>(), g.im.convert_to<double>()};
}

double sinc_u(double u) {
  double a = std::abs(u);
  if (a < 1e-4) {
    double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

double sinc(double x) { return sinc_u(pi * x); }

double ipow(double x, int n) {
  double r = 1.0;
  double b = x;
  for (unsigned e = static_cast<unsigned>(n); e; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

KernelGrid theta_n(const Axis& zeta1, std::size_t n1, const Axis& zeta2, std::size_t n2, int n) {
  if (n < 0) throw std::invalid_argument("theta_n: order must be >= 0");
  Grid2D g(n1, n2, zeta1, zeta2);
  parallel_for(n1, [&](std::size_t i) {
    double z1 = zeta1.value(i);
    cplx* row = g.row(i);
    for (std::size_t j = 0; j < n2; ++j) {
      double p = z1 * zeta2.value(j);
      row[j] = (p == 0.0) ? 1.0 : ipow(sinc(p), n);
    }
  });
  return KernelGrid{n, std::move(g)};
}

std::vector<Rational> sinc_pow_derivs_series(int n, int k_max) {
  if (n < 1 || k_max < 0) throw std::invalid_argument("sinc_pow_derivs: need n >= 1, k_max >= 0");
  std::size_t len = static_cast<std::size_t>(k_max) + 1;
  // series of sinc_u: sum_m (-1)^m u^{2m}/(2m+1)!
  std::vector<Rational> base(len, Rational(0));
  for (std::size_t m = 0; 2 * m < len; ++m) {
    Rational c(1, factorial(static_cast<unsigned>(2 * m + 1)));
    if (m & 1) c = -c;
    base[2 * m] = c;
  }
  std::vector<Rational> acc(len, Rational(0));
  acc[0] = 1;
  for (int rep = 0; rep < n; ++rep) {
    std::vector<Rational> out(len, Rational(0));
    for (std::size_t i = 0; i < len; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) {
        if (base[j] == 0) continue;
        out[i + j] += acc[i] * base[j];
      }
    }
    acc = std::move(out);
  }
  std::vector<Rational> d(len);
  for (std::size_t k = 0; k < len; ++k) d[k] = Rational(factorial(static_cast<unsigned>(k))) * acc[k];
  return d;
}

namespace {

// Enumerates alpha = (alpha_1..alpha_k) with sum j*alpha_j = k, |alpha| <= n.
// Odd-order sinc_u derivatives vanish, so only even parts contribute; the
// recursion still walks all parts and prunes via the zero table entries.
void faa_walk(int k, int n, int j, int rem, int asum, const Rational& prod,
              const BigInt& multin_denom, Rational& total,
              const std::vector<Rational>& deriv_over_fact) {
  if (rem == 0) {
    if (asum >= 1) {
      Rational term(factorial(static_cast<unsigned>(k)), multin_denom);
      term *= Rational(factorial(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(n - asum)));
      term *= prod;
      total += term;
    }
    return;
  }
  if (j > rem) return;
  Rational p = prod;
  BigInt denom = multin_denom;
  for (int a = 0; j * a <= rem && asum + a <= n; ++a) {
    if (a > 0) {
      p *= deriv_over_fact[static_cast<std::size_t>(j)];
      denom *= a;
      if (p == 0) break;  // odd part: the whole branch vanishes
    }
    faa_walk(k, n, j + 1, rem - j * a, asum + a, p, denom, total, deriv_over_fact);
  }
}

}  // namespace

std::vector<Rational> sinc_pow_derivs_faa(int n, int k_max) {
  if (n < 1 || k_max < 0) throw std::invalid_argument("sinc_pow_derivs: need n >= 1, k_max >= 0");
  std::size_t len = static_cast<std::size_t>(k_max) + 1;
  // s_j / j! with s_j = sinc_u^{(j)}(0): 0 for odd j, (-1)^{j/2}/(j+1) for even j
  std::vector<Rational> dof(len, Rational(0));
  for (std::size_t j = 0; j < len; j += 2) {
    Rational c(1, BigInt(j + 1) * factorial(static_cast<unsigned>(j)));
    if ((j / 2) & 1) c = -c;
    dof[j] = c;
  }
  std::vector<Rational> d(len, Rational(0));
  d[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    Rational total(0);
    faa_walk(k, n, 1, k, 0, Rational(1), BigInt(1), total, dof);
    d[static_cast<std::size_t>(k)] = total;
  }
  return d;
}

SincDerivTable phi_derivs(int n, int k_max) {
  if (n < 0 || k_max < 0) throw std::invalid_argument("phi_derivs: need n >= 0, k_max >= 0");
  std::size_t len = static_cast<std::size_t>(k_max) + 1;
  std::vector<Rational> d;
  if (n == 0) {
    d.assign(len, Rational(0));
    d[0] = 1;
  } else {
    d = sinc_pow_derivs_series(n, k_max);
  }
  SincDerivTable t;
  t.order = n;
  t.values.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    GaussRational fj;
    for (std::size_t k = 0; k <= j; ++k) {
      if (d[k] == 0) continue;
      Rational scale(binomial(static_cast<unsigned>(j), static_cast<unsigned>(k)),
                     BigInt(1) << j);  // C(j,k) (1/2)^{j-k} (1/2)^k
      fj = fj + (scale * d[k]) * i_pow(static_cast<unsigned>(j - k));
    }
    t.values.push_back(fj);
  }
  return t;
}

}  // namespace tfbjn
