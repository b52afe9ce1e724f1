#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nsalpha {

/// Exact rational scalar.  mpq_class keeps gcd(|num|, den) = 1 and den >= 1.
using Rational = mpq_class;

using cdouble = std::complex<double>;

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2 = re^2 + im^2, exact.
  Rational norm_sq() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const {
    if (is_zero()) throw std::invalid_argument("GaussianRational: inverse of zero");
    Rational n = norm_sq();
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  cdouble to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const;
};

inline GaussianRational operator*(const Rational& c, const GaussianRational& g) {
  return {c * g.re, c * g.im};
}

std::string rational_str(const Rational& q);

}  // namespace nsalpha
