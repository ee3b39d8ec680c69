#include "logjones/qcalc/qsymbols.hpp"

#include <map>
#include <mutex>
#include <string>

#include "logjones/error.hpp"

namespace logjones::qcalc {

LaurentPoly brace(int n) {
  if (n == 0) return {};
  return LaurentPoly::q_power(n) - LaurentPoly::q_power(-n);
}

LaurentPoly brace_plus_poly(int n) {
  return LaurentPoly::q_power(n) + LaurentPoly::q_power(-n);
}

LaurentPoly brace_falling(int n, int k) {
  if (k < 0) throw DomainError("brace_falling requires k >= 0");
  LaurentPoly p(1);
  for (int j = 0; j < k && !p.is_zero(); ++j) p *= brace(n - j);
  return p;
}

LaurentPoly qint(int n) { return exact_divide(brace(n), brace(1)); }

LaurentPoly qfact(int n) {
  if (n < 0) throw DomainError("qfact requires n >= 0");
  LaurentPoly p(1);
  for (int k = 2; k <= n; ++k) p *= qint(k);
  return p;
}

LaurentPoly qbinom(int n, int k) {
  if (n < 0) throw DomainError("qbinom requires n >= 0");
  if (k < 0 || k > n) return {};
  return exact_divide(qfact(n), qfact(k) * qfact(n - k));
}

ComplexHP brace_plus(int n, const RootContext& ctx) { return ctx.xi_power(n) + ctx.xi_power(-n); }

LaurentPoly ddq(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& t : p.terms()) {
    if (t.exp2 == 0) continue;
    out += LaurentPoly::monomial(t.coeff * mpq_class(t.exp2, 2), t.exp2 - 2);
  }
  return out;
}

Real to_real(const mpq_class& c) {
  Real r(0);
  mpfr_set_q(r.backend().data(), c.get_mpq_t(), MPFR_RNDN);
  return r;
}

ComplexHP eval(const LaurentPoly& p, const RootContext& ctx) {
  ComplexHP sum;
  for (const auto& t : p.terms()) {
    const ComplexHP& z = ctx.half_power(t.exp2);
    const Real c = to_real(t.coeff);
    sum.re += c * z.re;
    sum.im += c * z.im;
  }
  return sum;
}

ComplexHP eval_at(const LaurentPoly& p, const ComplexHP& q_half) {
  if (p.is_zero()) return {};
  // Horner in x = q^{1/2} over the span [min_exp2, max_exp2].
  const auto& terms = p.terms();
  ComplexHP acc;
  int current = terms.back().exp2;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    for (; current > it->exp2; --current) acc *= q_half;
    acc += ComplexHP(to_real(it->coeff));
  }
  // acc now holds sum c_e x^{e - min}; restore the lowest power.
  const int lo = p.min_exp2();
  ComplexHP base = lo >= 0 ? q_half : ComplexHP(1) / q_half;
  for (int k = 0; k < (lo >= 0 ? lo : -lo); ++k) acc *= base;
  return acc;
}

Real coefficient_scale(const LaurentPoly& p) {
  Real s(0);
  for (const auto& t : p.terms()) s += boost::multiprecision::abs(to_real(t.coeff));
  return s;
}

bool vanishes_at_xi(const LaurentPoly& p, const RootContext& ctx) {
  return ctx.is_zero(eval(p, ctx), coefficient_scale(p));
}

ComplexHP lhopital_ratio(const LaurentPoly& num, const LaurentPoly& den, const RootContext& ctx) {
  if (den.is_zero()) throw DomainError("lhopital_ratio: denominator is identically zero");
  LaurentPoly n = num;
  LaurentPoly d = den;
  for (int k = 0; k <= 2 * ctx.N(); ++k) {
    const ComplexHP dv = eval(d, ctx);
    const ComplexHP nv = eval(n, ctx);
    if (!ctx.is_zero(dv, coefficient_scale(d))) return nv / dv;
    if (!ctx.is_zero(nv, coefficient_scale(n)))
      throw LimitError("lhopital_ratio: pole at q = xi after " + std::to_string(k) +
                       " derivatives");
    n = ddq(n);
    d = ddq(d);
  }
  throw LimitError("lhopital_ratio: denominator vanishes to order > 2N at q = xi");
}

Germ operator*(const Germ& a, const Germ& b) {
  if (a.is_zero() || b.is_zero()) return Germ{Germ::kInfiniteOrder, ComplexHP()};
  return Germ{a.order + b.order, a.lead * b.lead};
}

Germ germ(const LaurentPoly& p, const RootContext& ctx) {
  if (p.is_zero()) return Germ{Germ::kInfiniteOrder, ComplexHP()};
  LaurentPoly d = p;
  Real factorial(1);
  for (int k = 0; k <= 2 * ctx.N(); ++k) {
    const ComplexHP v = eval(d, ctx);
    if (!ctx.is_zero(v, coefficient_scale(d))) {
      ComplexHP lead = v;
      lead.re /= factorial;
      lead.im /= factorial;
      return Germ{k, lead};
    }
    d = ddq(d);
    factorial *= (k + 1);
  }
  throw LimitError("germ: polynomial vanishes to order > 2N at q = xi");
}

ComplexHP germ_limit(const Germ& num, const Germ& den) {
  if (den.is_zero()) throw DomainError("germ_limit: denominator is identically zero");
  if (num.is_zero() || num.order > den.order) return {};
  if (num.order < den.order) throw LimitError("germ_limit: pole at q = xi");
  return num.lead / den.lead;
}

LaurentPoly cyclotomic_half(int d) {
  if (d < 1) throw DomainError("cyclotomic_half requires d >= 1");
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::monomial(1, d) - 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = exact_divide(p, cyclotomic_half(e));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, p).first->second;
}

bool divide_if_exact(LaurentPoly& p, const LaurentPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) return false;
  p = std::move(q);
  return true;
}

ComplexHP cyclotomic_limit(LaurentPoly num, LaurentPoly den, const RootContext& ctx) {
  if (den.is_zero()) throw DomainError("cyclotomic_limit: zero denominator");
  if (num.is_zero()) return {};
  const LaurentPoly phi = cyclotomic_half(4 * ctx.N());
  while (divide_if_exact(den, phi))
    if (!divide_if_exact(num, phi)) throw LimitError("cyclotomic_limit: pole at q = xi");
  return eval(num, ctx) / eval(den, ctx);
}

}  // namespace logjones::qcalc
