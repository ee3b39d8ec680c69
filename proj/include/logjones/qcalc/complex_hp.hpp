#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace logjones::qcalc {

/// Runtime-precision MPFR real. Expression templates are off so that `auto`
/// always yields a value.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Complex number over Real. Precision follows Real's current default.
struct ComplexHP {
  Real re;
  Real im;

  ComplexHP() : re(0), im(0) {}
  ComplexHP(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  ComplexHP(long r) : re(r), im(0) {}             // NOLINT(google-explicit-constructor)
  ComplexHP(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  /// exp(i*theta)
  static ComplexHP polar(const Real& radius, const Real& theta);
  static ComplexHP i() { return {Real(0), Real(1)}; }

  ComplexHP conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const;

  ComplexHP& operator+=(const ComplexHP& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexHP& operator-=(const ComplexHP& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexHP& operator*=(const ComplexHP& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexHP& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  ComplexHP& operator/=(const ComplexHP& o);

  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator*(ComplexHP a, const Real& s) { return a *= s; }
  friend ComplexHP operator*(const Real& s, ComplexHP a) { return a *= s; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
  ComplexHP operator-() const { return {-re, -im}; }

  /// Exact equality of both parts; use a tolerance for anything computed.
  friend bool operator==(const ComplexHP& a, const ComplexHP& b) { return a.re == b.re && a.im == b.im; }

  /// "re + im*i" with the given number of significant digits.
  std::string to_string(int digits) const;
};

inline Real abs(const ComplexHP& z) { return z.abs(); }

/// Exact zero; used to skip structural zeros, not as a numerical test.
inline bool is_zero_scalar(const ComplexHP& z) { return z.re == 0 && z.im == 0; }

/// Decimal string of a real in scientific notation with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);

}  // namespace logjones::qcalc
