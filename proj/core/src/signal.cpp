#include "tfbjn/signal.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "tfbjn/errors.hpp"
#include "tfbjn/grid.hpp"
#include "tfbjn/spectral.hpp"

namespace tfbjn {

namespace {
constexpr double pi = std::numbers::pi;

double default_t0(std::size_t n, double fs) {
  return -static_cast<double>(n / 2) / fs;
}

void require_grid(std::size_t n, double fs) {
  if (!is_pow2(n)) throw std::invalid_argument("signal length must be a power of two >= 2");
  if (!(fs > 0.0)) throw std::invalid_argument("sample_rate must be positive");
}
}  // namespace

void validate(const Signal& s) {
  require_grid(s.samples.size(), s.sample_rate);
}

double energy(const Signal& s) {
  double acc = 0.0;
  for (const auto& v : s.samples) acc += std::norm(v);
  return acc / s.sample_rate;
}

Signal gen_gaussian(const GaussAtom& atom, std::size_t n_samples, double sample_rate) {
  require_grid(n_samples, sample_rate);
  if (!(atom.spread > 0.0)) throw std::invalid_argument("gen_gaussian: spread must be positive");
  Signal s;
  s.sample_rate = sample_rate;
  s.t0 = default_t0(n_samples, sample_rate);
  s.samples.resize(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    double u = (s.time_at(k) - atom.t_center) / atom.spread;
    double env = std::exp(-pi * u * u);
    double ph = 2.0 * pi * atom.f_center * (s.time_at(k) - atom.t_center);
    s.samples[k] = atom.amplitude * env * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return s;
}

Signal gen_linear_chirp(double f_start, double f_end, std::size_t n_samples, double sample_rate) {
  require_grid(n_samples, sample_rate);
  if (std::abs(f_start) >= sample_rate / 2 || std::abs(f_end) >= sample_rate / 2)
    throw std::invalid_argument("gen_linear_chirp: frequencies must stay below Nyquist");
  Signal s;
  s.sample_rate = sample_rate;
  s.t0 = default_t0(n_samples, sample_rate);
  s.samples.resize(n_samples);
  double T = s.duration();
  for (std::size_t k = 0; k < n_samples; ++k) {
    // phase measured from the first sample so the sweep runs f_start -> f_end
    double u = s.time_at(k) - s.t0;
    double ph = 2.0 * pi * (f_start * u + (f_end - f_start) / (2.0 * T) * u * u);
    s.samples[k] = {std::cos(ph), std::sin(ph)};
  }
  return s;
}

Signal superpose(std::span<const Signal> signals) {
  if (signals.empty()) throw std::invalid_argument("superpose: empty input");
  Signal out = signals[0];
  for (std::size_t i = 1; i < signals.size(); ++i) {
    const Signal& s = signals[i];
    if (s.samples.size() != out.samples.size() || s.sample_rate != out.sample_rate ||
        s.t0 != out.t0)
      throw std::invalid_argument("superpose: signals must share length, sample_rate and t0");
    for (std::size_t k = 0; k < out.samples.size(); ++k) out.samples[k] += s.samples[k];
  }
  return out;
}

Signal analytic_signal(const Signal& s) {
  validate(s);
  std::size_t n = s.size();
  auto spec = fft_centered(s.samples, s.dt());
  // centered layout: DC at n/2, Nyquist wrapped to bin 0
  for (std::size_t i = 1; i < n / 2; ++i) spec.values[i] = 0.0;
  for (std::size_t i = n / 2 + 1; i < n; ++i) spec.values[i] *= 2.0;
  auto back = ifft_centered(spec.values, spec.dual_step);
  Signal out = s;
  out.samples = std::move(back.values);
  return out;
}

void save_signal_csv(const Signal& s, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  char buf[128];
  std::snprintf(buf, sizeof buf, "# sample_rate=%.17g t0=%.17g\n", s.sample_rate, s.t0);
  f << buf;
  for (std::size_t k = 0; k < s.samples.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", k, s.samples[k].real(),
                  s.samples[k].imag());
    f << buf;
  }
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

Signal load_signal_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  Signal s;
  bool have_header = false;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      double fs, t0;
      if (std::sscanf(line.c_str(), "# sample_rate=%lg t0=%lg", &fs, &t0) != 2)
        throw FormatError("bad header", lineno);
      s.sample_rate = fs;
      s.t0 = t0;
      have_header = true;
      continue;
    }
    unsigned long k;
    double re, im;
    char trail;
    int got = std::sscanf(line.c_str(), "%lu,%lg,%lg %c", &k, &re, &im, &trail);
    if (got != 3) throw FormatError("bad row '" + line + "'", lineno);
    if (k != s.samples.size()) throw FormatError("row index out of order", lineno);
    s.samples.emplace_back(re, im);
  }
  if (!have_header) throw FormatError("missing header", 1);
  if (!is_pow2(s.samples.size()))
    throw std::invalid_argument("signal CSV: row count must be a power of two >= 2");
  if (!(s.sample_rate > 0.0))
    throw std::invalid_argument("signal CSV: sample_rate must be positive");
  return s;
}

}  // namespace tfbjn
