#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfbjn {

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

/// Uniformly spaced axis. value(i) = start + i*step.
struct Axis {
  double start = 0.0;
  double step = 1.0;
  std::string unit;

  double value(std::size_t i) const { return start + step * static_cast<double>(i); }
};

/// Axis with n bins, step `step`, centered so that bin n/2 sits at 0.
inline Axis centered_axis(std::size_t n, double step, std::string unit = {}) {
  return Axis{-static_cast<double>(n / 2) * step, step, std::move(unit)};
}

/// Dense complex grid over two axes; row index follows axis1, column index axis2.
/// Both dimensions are powers of two and steps are positive.
class Grid2D {
 public:
  Grid2D() = default;
  Grid2D(std::size_t rows, std::size_t cols, Axis axis1, Axis axis2)
      : rows_(rows), cols_(cols), axis1_(std::move(axis1)), axis2_(std::move(axis2)),
        v_(rows * cols) {
    if (!is_pow2(rows_) || !is_pow2(cols_))
      throw std::invalid_argument("Grid2D: dimensions must be powers of two >= 2");
    if (axis1_.step <= 0.0 || axis2_.step <= 0.0)
      throw std::invalid_argument("Grid2D: axis steps must be positive");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Axis& axis1() const { return axis1_; }
  const Axis& axis2() const { return axis2_; }

  cplx& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  cplx* row(std::size_t i) { return v_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return v_.data() + i * cols_; }

  std::vector<cplx>& values() { return v_; }
  const std::vector<cplx>& values() const { return v_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Axis axis1_, axis2_;
  std::vector<cplx> v_;
};

}  // namespace tfbjn
