#include "logjones/qcalc/root_context.hpp"

#include <string>

#include "logjones/error.hpp"

namespace logjones::qcalc {

RootContext::RootContext(int N, int precision_digits) : N_(N), digits_(precision_digits) {
  if (N < 2) throw DomainError("RootContext requires N >= 2, got " + std::to_string(N));
  if (precision_digits < kMinPrecisionDigits)
    throw DomainError("precision_digits must be >= " + std::to_string(kMinPrecisionDigits));
  Real::default_precision(static_cast<unsigned>(precision_digits));
  pi_ = Real(0);
  mpfr_const_pi(pi_.backend().data(), MPFR_RNDN);
  tol_ = boost::multiprecision::pow(Real(10), -Real(precision_digits) / 2);

  const int order = 4 * N;
  half_powers_.reserve(order);
  for (int k = 0; k < order; ++k) {
    // Exact values at the quarter turns keep e.g. xi^N = -1 free of rounding.
    switch ((k * 4) % order == 0 ? (k * 4) / order : -1) {
      case 0: half_powers_.emplace_back(Real(1), Real(0)); break;
      case 1: half_powers_.emplace_back(Real(0), Real(1)); break;
      case 2: half_powers_.emplace_back(Real(-1), Real(0)); break;
      case 3: half_powers_.emplace_back(Real(0), Real(-1)); break;
      default: half_powers_.push_back(ComplexHP::polar(Real(1), pi_ * k / (2 * N)));
    }
  }
}

const ComplexHP& RootContext::half_power(long exp2) const {
  const long order = static_cast<long>(half_powers_.size());
  long r = exp2 % order;
  if (r < 0) r += order;
  return half_powers_[static_cast<std::size_t>(r)];
}

bool RootContext::is_zero(const ComplexHP& z, const Real& scale) const {
  return z.abs() <= tol_ * scale;
}

}  // namespace logjones::qcalc
