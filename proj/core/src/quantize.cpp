#include "tfbjn/quantize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "tfbjn/errors.hpp"
#include "tfbjn/kernels.hpp"
#include "tfbjn/parallel.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {
constexpr double pi = std::numbers::pi;

void require_symbol_grid(const SymbolGrid& a) {
  const Grid2D& g = a.grid;
  if (g.rows() != 2 * g.cols())
    throw std::invalid_argument("symbol grid must be twice-dense in x (rows == 2*cols)");
  // dx/2 * dw == 1/(2N) ties the x density to the full-band omega grid
  double rel = g.axis1().step * g.axis2().step * static_cast<double>(g.rows());
  if (std::abs(rel - 1.0) > 1e-9)
    throw std::invalid_argument("symbol grid axes are not duals (need dx*dw == 1/N)");
}
}  // namespace

CoeffTable monomial_coeffs(int m, int l, int n) {
  if (m < 0 || l < 0 || n < 0) throw std::invalid_argument("monomial_coeffs: need m,l,n >= 0");
  int jmax = std::min(m, l);
  SincDerivTable f = phi_derivs(n, jmax);
  CoeffTable t;
  t.m = m;
  t.l = l;
  t.n = n;
  t.coeffs.reserve(static_cast<std::size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    // c_j = j! C(m,j) C(l,j) f_j (2 pi)^{-j}; the 2^{-j} stays in the rational part
    Rational scale(factorial(static_cast<unsigned>(j)) *
                       binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) *
                       binomial(static_cast<unsigned>(l), static_cast<unsigned>(j)),
                   BigInt(1) << j);
    t.coeffs.push_back(scale * f.values[static_cast<std::size_t>(j)]);
  }
  return t;
}

std::string coeff_table_to_json(const CoeffTable& t) {
  nlohmann::ordered_json j;
  j["m"] = t.m;
  j["l"] = t.l;
  j["n"] = t.n;
  j["coeffs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
    const GaussRational& c = t.coeffs[i];
    nlohmann::ordered_json e;
    e["j"] = i;
    e["re_num"] = numerator(c.re).str();
    e["re_den"] = denominator(c.re).str();
    e["im_num"] = numerator(c.im).str();
    e["im_den"] = denominator(c.im).str();
    e["pi_power"] = -static_cast<long>(i);
    j["coeffs"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

SymbolGrid make_symbol_grid(std::size_t n_signal, double sample_rate) {
  if (!is_pow2(n_signal)) throw std::invalid_argument("make_symbol_grid: length must be a power of two");
  double dx = 1.0 / sample_rate;
  double n = static_cast<double>(n_signal);
  SymbolGrid s;
  s.grid = Grid2D(2 * n_signal, n_signal, centered_axis(2 * n_signal, dx / 2.0, "s"),
                  centered_axis(n_signal, sample_rate / n, "Hz"));
  return s;
}

std::vector<cplx> OperatorMatrix::apply(const std::vector<cplx>& v) const {
  if (v.size() != dim) throw std::invalid_argument("OperatorMatrix::apply: size mismatch");
  std::vector<cplx> out(dim, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < dim; ++j) {
    const cplx* row = entries.data() + j * dim;
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < dim; ++k) acc += row[k] * v[k];
    out[j] = acc;
  }
  return out;
}

OperatorMatrix weyl_quantize(const SymbolGrid& a) {
  require_symbol_grid(a);
  const Grid2D& g = a.grid;
  const std::size_t n = g.cols();
  const double dx = 2.0 * g.axis1().step;
  const double dw = g.axis2().step;

  // phase table over lags u = j-k: P[u][m] = e^{2pi i u dx w_m}
  std::vector<std::vector<cplx>> phase(2 * n - 1, std::vector<cplx>(n));
  for (std::size_t ui = 0; ui < 2 * n - 1; ++ui) {
    double u = static_cast<double>(static_cast<long>(ui) - static_cast<long>(n - 1));
    for (std::size_t m = 0; m < n; ++m)
      phase[ui][m] = std::polar(1.0, 2.0 * pi * u * dx * g.axis2().value(m));
  }

  OperatorMatrix M;
  M.dim = n;
  M.entries.resize(n * n);
  M.provenance = OperatorMatrix::Provenance::Weyl;
  parallel_for(n, [&](std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx* mid = g.row(j + k);  // a((x_j+x_k)/2, .)
      std::size_t ui = static_cast<std::size_t>(static_cast<long>(j) - static_cast<long>(k) +
                                                static_cast<long>(n) - 1);
      const cplx* ph = phase[ui].data();
      cplx acc{0.0, 0.0};
      for (std::size_t m = 0; m < n; ++m) acc += mid[m] * ph[m];
      M.at(j, k) = dx * dw * acc;
    }
  });
  return M;
}

SymbolGrid bj_symbol_to_weyl(const SymbolGrid& a, int n) {
  if (n < 0) throw std::invalid_argument("bj_symbol_to_weyl: order must be >= 0");
  if (n == 0) {
    SymbolGrid out = a;
    out.tag = SymbolTag::WeylSymbol;
    return out;
  }
  require_symbol_grid(a);
  Grid2D amb = symplectic_ft(a.grid);
  KernelGrid th = theta_n(amb.axis1(), amb.rows(), amb.axis2(), amb.cols(), n);
  for (std::size_t i = 0; i < amb.rows(); ++i) {
    cplx* row = amb.row(i);
    const cplx* t = th.grid.row(i);
    for (std::size_t j = 0; j < amb.cols(); ++j) row[j] *= t[j].real();
  }
  SymbolGrid out;
  out.grid = isymplectic_ft(amb);
  out.tag = SymbolTag::WeylSymbol;
  out.order = 0;
  return out;
}

OperatorMatrix bj_quantize(const SymbolGrid& a, int n) {
  OperatorMatrix M = weyl_quantize(bj_symbol_to_weyl(a, n));
  M.provenance = OperatorMatrix::Provenance::Bj;
  return M;
}

OperatorMatrix bj_quantize_weak(const SymbolGrid& a, int n) {
  if (n < 0) throw std::invalid_argument("bj_quantize_weak: order must be >= 0");
  require_symbol_grid(a);
  const Grid2D& g = a.grid;
  const std::size_t N = g.cols();
  if (N > 64)
    throw NumericGuardError("bj_quantize_weak: O(N^4) assembly capped at N <= 64, got N = " +
                            std::to_string(N));
  const double dx = 2.0 * g.axis1().step;
  const double dw = g.axis2().step;

  // Theta on the dual of the symbol grid, shared across all pairs; the axis
  // expressions mirror what symplectic_ft produces for this grid
  Axis zeta1 = centered_axis(g.cols(), 1.0 / (static_cast<double>(g.cols()) * g.axis2().step), "s");
  Axis zeta2 = centered_axis(g.rows(), 1.0 / (static_cast<double>(g.rows()) * g.axis1().step), "Hz");
  KernelGrid th = theta_n(zeta1, g.cols(), zeta2, g.rows(), n);

  OperatorMatrix M;
  M.dim = N;
  M.entries.resize(N * N);
  M.provenance = OperatorMatrix::Provenance::WeakForm;
  parallel_for(N, [&](std::size_t j) {
    Grid2D w(g.rows(), g.cols(), g.axis1(), g.axis2());
    for (std::size_t k = 0; k < N; ++k) {
      // cross-Wigner of basis vectors e_j, e_k on the midpoint lattice:
      // one nonzero time row at r = j+k
      std::fill(w.values().begin(), w.values().end(), cplx{0.0, 0.0});
      cplx* row = w.row(j + k);
      double u = static_cast<double>(j) - static_cast<double>(k);
      for (std::size_t m = 0; m < N; ++m)
        row[m] = 2.0 * dx * std::polar(1.0, -2.0 * pi * u * dx * g.axis2().value(m));

      Grid2D amb = symplectic_ft(w);
      for (std::size_t r = 0; r < amb.rows(); ++r) {
        cplx* ar = amb.row(r);
        const cplx* tr = th.grid.row(r);
        for (std::size_t c = 0; c < amb.cols(); ++c) ar[c] *= tr[c].real();
      }
      Grid2D q = isymplectic_ft(amb);

      cplx acc{0.0, 0.0};
      const cplx* av = g.values().data();
      const cplx* qv = q.values().data();
      for (std::size_t i = 0; i < q.values().size(); ++i) acc += av[i] * std::conj(qv[i]);
      M.at(j, k) = acc * (g.axis1().step * dw / dx);
    }
  });
  return M;
}

}  // namespace tfbjn
