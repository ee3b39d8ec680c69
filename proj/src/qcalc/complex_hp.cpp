#include "logjones/qcalc/complex_hp.hpp"

#include <ios>

namespace logjones::qcalc {

ComplexHP ComplexHP::polar(const Real& radius, const Real& theta) {
  return {radius * boost::multiprecision::cos(theta), radius * boost::multiprecision::sin(theta)};
}

Real ComplexHP::abs() const { return boost::multiprecision::sqrt(abs2()); }

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  const Real d = o.abs2();
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

std::string to_decimal(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

std::string ComplexHP::to_string(int digits) const {
  std::string s = to_decimal(re, digits);
  if (im >= 0)
    s += " + " + to_decimal(im, digits) + "*i";
  else
    s += " - " + to_decimal(-im, digits) + "*i";
  return s;
}

}  // namespace logjones::qcalc
