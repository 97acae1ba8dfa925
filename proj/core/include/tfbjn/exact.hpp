#pragma once

#include <complex>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace tfbjn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Complex number with exact rational real and imaginary parts.
struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator*(const Rational& s, const GaussRational& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussRational conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// (i)^p as a GaussRational, p >= 0.
GaussRational i_pow(unsigned p);

std::complex<double> to_complex(const GaussRational& g);

}  // namespace tfbjn
