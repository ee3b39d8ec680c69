#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace logjones::qcalc {

/// Exact Laurent polynomial in q^{1/2} with rational coefficients.
///
/// Exponents are stored doubled: the term c*q^{e/2} is kept as (e, c). Terms
/// are sorted by exponent and no stored coefficient is zero, so two equal
/// polynomials always have identical term vectors.
class LaurentPoly {
 public:
  struct Term {
    int exp2;
    mpq_class coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  explicit LaurentPoly(const mpq_class& c);

  /// c * q^{exp2/2}
  static LaurentPoly monomial(const mpq_class& c, int exp2);
  /// q^n
  static LaurentPoly q_power(int n) { return monomial(1, 2 * n); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Smallest / largest doubled exponent. Undefined on the zero polynomial.
  int min_exp2() const { return terms_.front().exp2; }
  int max_exp2() const { return terms_.back().exp2; }

  mpq_class coeff(int exp2) const;

  /// Multiply by q^{exp2/2}.
  LaurentPoly shifted(int exp2) const;
  /// Substitute q -> q^{-1}.
  LaurentPoly inverted() const;
  /// True when the polynomial is invariant under q -> q^{-1}.
  bool is_palindromic() const { return *this == inverted(); }

  /// Sum of absolute values of the coefficients.
  double l1_norm_estimate() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpq_class& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }
  friend LaurentPoly operator*(const mpq_class& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "q^2 - 1 + 3/2*q^(-1/2)".
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
  void add_scaled(const LaurentPoly& other, int sign);

  std::vector<Term> terms_;

  friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly&, const LaurentPoly&);
};

/// Laurent division in q^{1/2}: num = quot * den + rem with the remainder's
/// span strictly narrower than den's. Throws DomainError on den == 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& num, const LaurentPoly& den);

/// num / den, throwing InexactDivision when a remainder is left.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// p^k for k >= 0.
LaurentPoly pow(const LaurentPoly& p, int k);

inline bool is_zero_scalar(const LaurentPoly& p) { return p.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Render a doubled exponent as "n" or "n/2".
std::string exp2_to_string(int exp2);

}  // namespace logjones::qcalc
