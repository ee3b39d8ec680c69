#pragma once

#include <vector>

#include "logjones/qcalc/complex_hp.hpp"

namespace logjones::qcalc {

inline constexpr int kDefaultPrecisionDigits = 60;
inline constexpr int kMinPrecisionDigits = 30;

/// The root of unity xi = exp(pi*i/N) at a fixed working precision.
///
/// Constructing a context sets the MPFR default precision for the calling
/// thread; every Real created afterwards carries precision_digits digits.
/// Comparisons use the tolerance 10^{-precision_digits/2}.
class RootContext {
 public:
  explicit RootContext(int N, int precision_digits = kDefaultPrecisionDigits);

  int N() const { return N_; }
  int precision_digits() const { return digits_; }

  const ComplexHP& xi() const { return half_powers_[2]; }
  /// xi^{1/2} = exp(pi*i/(2N))
  const ComplexHP& xi_half() const { return half_powers_[1]; }
  /// (xi^{1/2})^{exp2}, read from a table of the 4N-th roots of unity.
  const ComplexHP& half_power(long exp2) const;
  const ComplexHP& xi_power(long n) const { return half_power(2 * n); }

  const Real& pi() const { return pi_; }
  const Real& tolerance() const { return tol_; }

  /// |z| <= tolerance * scale
  bool is_zero(const ComplexHP& z, const Real& scale = Real(1)) const;
  bool close(const ComplexHP& a, const ComplexHP& b, const Real& scale = Real(1)) const {
    return is_zero(a - b, scale);
  }

 private:
  int N_;
  int digits_;
  Real pi_;
  Real tol_;
  std::vector<ComplexHP> half_powers_;
};

}  // namespace logjones::qcalc
