#pragma once

#include <climits>

#include "logjones/qcalc/complex_hp.hpp"
#include "logjones/qcalc/laurent_poly.hpp"
#include "logjones/qcalc/root_context.hpp"

namespace logjones::qcalc {

/// {n}_q = q^n - q^{-n}
LaurentPoly brace(int n);
/// q^n + q^{-n}
LaurentPoly brace_plus_poly(int n);
/// {n, k}_q = prod_{j=0}^{k-1} {n-j}_q; the empty product is 1.
LaurentPoly brace_falling(int n, int k);
/// [n]_q = {n}_q / {1}_q for any integer n.
LaurentPoly qint(int n);
/// [n]_q! for n >= 0.
LaurentPoly qfact(int n);
/// Quantum binomial [n choose k]_q; zero outside 0 <= k <= n.
LaurentPoly qbinom(int n, int k);

/// {n}_+ = xi^n + xi^{-n} = 2 cos(n*pi/N).
ComplexHP brace_plus(int n, const RootContext& ctx);

/// d/dq, term by term: c q^{e/2} -> (e/2) c q^{e/2 - 1}.
LaurentPoly ddq(const LaurentPoly& p);

/// p at q = xi, i.e. q^{1/2} = exp(pi*i/(2N)).
ComplexHP eval(const LaurentPoly& p, const RootContext& ctx);
/// p at an arbitrary point, given q^{1/2}.
ComplexHP eval_at(const LaurentPoly& p, const ComplexHP& q_half);

/// Sum of |coefficients| as a Real; the scale used for "vanishes at xi".
Real coefficient_scale(const LaurentPoly& p);
/// p(xi) == 0 to working precision, relative to coefficient_scale(p).
bool vanishes_at_xi(const LaurentPoly& p, const RootContext& ctx);

/// lim_{q -> xi} num/den by repeated differentiation of both sides.
/// Throws LimitError on a pole or when den vanishes to order > 2N.
ComplexHP lhopital_ratio(const LaurentPoly& num, const LaurentPoly& den, const RootContext& ctx);

/// Local behaviour of a polynomial at q = xi: p(q) ~ lead * (q - xi)^order.
/// The zero polynomial has order kInfiniteOrder.
struct Germ {
  static constexpr int kInfiniteOrder = INT_MAX;
  int order = 0;
  ComplexHP lead;

  bool is_zero() const { return order == kInfiniteOrder; }
  friend Germ operator*(const Germ& a, const Germ& b);
};

Germ germ(const LaurentPoly& p, const RootContext& ctx);
/// Germ of a nonzero constant or a value known not to vanish.
inline Germ regular_germ(ComplexHP v) { return Germ{0, std::move(v)}; }
/// lim num/den from germs: 0 when num vanishes faster, a ratio of leading
/// coefficients at equal order, LimitError on a pole.
ComplexHP germ_limit(const Germ& num, const Germ& den);

/// Cyclotomic polynomial Phi_d in the variable q^{1/2}.
LaurentPoly cyclotomic_half(int d);
/// Replaces p by p/d and returns true when the division is exact.
bool divide_if_exact(LaurentPoly& p, const LaurentPoly& d);
/// lim_{q -> xi} num/den for polynomials with rational coefficients: common
/// factors Phi_{4N}(q^{1/2}) (whose root is xi^{1/2}) are cancelled exactly,
/// then both sides are evaluated. Throws LimitError on a pole.
ComplexHP cyclotomic_limit(LaurentPoly num, LaurentPoly den, const RootContext& ctx);

/// Exact conversion helper.
Real to_real(const mpq_class& c);

}  // namespace logjones::qcalc
