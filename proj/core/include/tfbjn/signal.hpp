#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <vector>

namespace tfbjn {

/// Finite complex time series on a uniform grid. t_k = t0 + k/sample_rate.
/// Length is a power of two >= 2 (the transform contract downstream).
struct Signal {
  std::vector<std::complex<double>> samples;
  double sample_rate = 1.0;
  double t0 = 0.0;

  std::size_t size() const { return samples.size(); }
  double dt() const { return 1.0 / sample_rate; }
  double time_at(std::size_t k) const { return t0 + static_cast<double>(k) / sample_rate; }
  double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

/// Throws std::invalid_argument unless s satisfies the Signal invariants.
void validate(const Signal& s);

/// Weighted squared l2 norm: dt * sum |f_k|^2 (Riemann approximation of the energy).
double energy(const Signal& s);

struct GaussAtom {
  double t_center = 0.0;
  double f_center = 0.0;   // Hz
  double spread = 1.0;     // seconds, > 0
  std::complex<double> amplitude = 1.0;
};

/// samples[k] = amp * e^{-pi((t_k-tc)/spread)^2} * e^{2pi i fc (t_k-tc)},
/// on the default symmetric grid t0 = -n/(2 fs).
Signal gen_gaussian(const GaussAtom& atom, std::size_t n_samples, double sample_rate);

/// Unit-modulus linear chirp; instantaneous frequency runs linearly from
/// f_start (first sample) to f_end (end of the grid). Frequencies must stay
/// below Nyquist in magnitude.
Signal gen_linear_chirp(double f_start, double f_end, std::size_t n_samples, double sample_rate);

/// Pointwise sum; all inputs must share length, sample_rate and t0.
Signal superpose(std::span<const Signal> signals);

/// One-sided-spectrum transform of a (typically real) signal: negative
/// frequencies zeroed, positive doubled, DC and Nyquist kept.
Signal analytic_signal(const Signal& s);

// CSV: header "# sample_rate=<v> t0=<v>", then rows "k,re,im" at 17
// significant digits; load(save(f)) is bit-exact.
void save_signal_csv(const Signal& s, const std::filesystem::path& path);
Signal load_signal_csv(const std::filesystem::path& path);

}  // namespace tfbjn
