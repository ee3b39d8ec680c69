#include "logjones/loginv/loginv.hpp"

#include <algorithm>
#include <functional>

#include "logjones/error.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::loginv {

using qcalc::LaurentPoly;
using qcalc::Real;

namespace {

ComplexHP brace_at(int k, const RootContext& ctx) { return ctx.xi_power(k) - ctx.xi_power(-k); }

ComplexHP qint_at(int k, const RootContext& ctx) { return brace_at(k, ctx) / brace_at(1, ctx); }

ComplexHP scaled(const ComplexHP& z, const Real& r) { return z * r; }

void check_interior(int s, int N) {
  if (s < 1 || s > N - 1)
    throw DomainError("s = " + std::to_string(s) + " outside 1..N-1; use gamma_boundary for s = 0 or N");
}

// d/dq ({1}_q V_m(L^f) / [m]_q) at xi by the quotient rule.
ComplexHP quotient_derivative(const KnotSource& knot, int m, int f, const RootContext& ctx) {
  const LaurentPoly F = qcalc::brace(1) * knot.V_framed(m, f);
  const LaurentPoly G = qcalc::qint(m);
  const ComplexHP g = qcalc::eval(G, ctx);
  return (qcalc::eval(qcalc::ddq(F), ctx) * g - qcalc::eval(F, ctx) * qcalc::eval(qcalc::ddq(G), ctx)) / (g * g);
}

// d/dq ({1}_q V~_m(L^f)) at xi from the exact normalized invariant.
ComplexHP normalized_derivative(const KnotSource& knot, int m, int f, const RootContext& ctx) {
  return qcalc::eval(qcalc::ddq(qcalc::brace(1) * knot.V_tilde(m, f)), ctx);
}

ComplexHP b_from(const std::function<ComplexHP(int)>& D, int s, Sign sign, const RootContext& ctx) {
  const int N = ctx.N();
  const ComplexHP xi_over = ctx.xi() / (qint_at(s, ctx) * ComplexHP(sign == Sign::Plus ? 2 * N : 4 * N));
  if (sign == Sign::Plus) return xi_over * (D(s) - D(2 * N - s));
  return xi_over * (D(2 * N + s) - D(2 * N - s));
}

// (xi^{1/2})^{exp2}; exp2 may be any integer.
ComplexHP half_phase(long exp2, const RootContext& ctx) { return ctx.half_power(exp2); }

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::QDERIV: return "QDERIV";
    case Route::HABIRO: return "HABIRO";
    case Route::MDERIV: return "MDERIV";
  }
  return "?";
}

ComplexHP tilde_brace(int n, int j, const RootContext& ctx) {
  if (j < 0) throw DomainError("tilde_brace requires j >= 0");
  const int N = ctx.N();
  ComplexHP p(1);
  for (int k = 0; k < j; ++k) {
    const int v = n - k;
    if (v % N == 0) {
      const int t = v / N;
      if (t % 2 != 0) p = -p;
    } else {
      p *= brace_at(v, ctx);
    }
  }
  return p;
}

ComplexHP b_pm_via_derivative(const KnotSource& knot, int s, Sign sign, const RootContext& ctx, int framing) {
  check_interior(s, ctx.N());
  return b_from([&](int m) { return quotient_derivative(knot, m, framing, ctx); }, s, sign, ctx);
}

ComplexHP b_pm_via_centervalue(const KnotSource& knot, int s, Sign sign, const RootContext& ctx, int framing) {
  check_interior(s, ctx.N());
  return b_from([&](int m) { return normalized_derivative(knot, m, framing, ctx); }, s, sign, ctx);
}

ComplexHP b_pm_via_habiro(const habiro::HabiroCoeffs& h, int s, const RootContext& ctx, HabiroPrefactor prefactor) {
  const int N = ctx.N();
  check_interior(s, N);
  const int lo = std::min(s, N - s), hi = std::max(s, N - s);
  const ComplexHP denom = prefactor == HabiroPrefactor::BraceS ? brace_at(s, ctx) : qint_at(s, ctx);

  ComplexHP first;
  for (int i = 0; i < lo; ++i) {
    ComplexHP product(1), cot_sum;
    for (int k = s - i; k <= s + i; ++k) {
      const ComplexHP b = brace_at(k, ctx);
      product *= b;
      if (k != s) cot_sum += qcalc::brace_plus(k, ctx) / b;
    }
    first += qcalc::eval(h.coeff(i), ctx) * product / denom * cot_sum;
  }
  ComplexHP second;
  for (int i = lo; i < hi; ++i)
    second += qcalc::eval(h.coeff(i), ctx) * tilde_brace(s + i, i, ctx) * tilde_brace(s - 1, i, ctx);
  const ComplexHP b1 = brace_at(1, ctx);
  return b1 * b1 / brace_at(s, ctx) * (first + ComplexHP(2) * second);
}

ComplexHP gamma_s(const KnotSource& knot, int s, Route route, const RootContext& ctx) {
  const int N = ctx.N();
  check_interior(s, N);
  switch (route) {
    case Route::QDERIV: {
      const LaurentPoly p = qcalc::brace(1) * (knot.V(s) + knot.V(2 * N - s));
      return ctx.xi() * qcalc::eval(qcalc::ddq(p), ctx) / ComplexHP(2 * N);
    }
    case Route::HABIRO: {
      const auto h = knot.habiro(2 * N - 1);
      const int lo = std::min(s, N - s), hi = std::max(s, N - s);
      ComplexHP first;
      for (int i = 0; i < lo; ++i) {
        ComplexHP product(1), cot_sum;
        for (int k = s - i; k <= s + i; ++k) {
          const ComplexHP b = brace_at(k, ctx);
          product *= b;
          cot_sum += qcalc::brace_plus(k, ctx) / b;
        }
        first += qcalc::eval(h.coeff(i), ctx) * product * cot_sum;
      }
      ComplexHP second;
      for (int i = lo; i < hi; ++i) second += qcalc::eval(h.coeff(i), ctx) * tilde_brace(s + i, 2 * i + 1, ctx);
      return first + ComplexHP(2) * second;
    }
    case Route::MDERIV: {
      const auto h = knot.habiro(2 * N - 1);
      const ComplexHP factor = scaled(brace_at(1, ctx), Real(N)) / ComplexHP(Real(0), ctx.pi());
      return factor * habiro::ddm_Vm(h, s, ctx);
    }
  }
  throw DomainError("unknown route");
}

ComplexHP gamma_boundary(const KnotSource& knot, int which, const RootContext& ctx) {
  const int N = ctx.N();
  if (which == 0) return qcalc::lhopital_ratio(knot.V(2 * N), qcalc::qint(2 * N), ctx);
  if (which == N) return -qcalc::lhopital_ratio(knot.V(N), qcalc::qint(N), ctx);
  throw DomainError("gamma_boundary: which must be 0 or N");
}

ComplexHP gamma_boundary_qderiv(const KnotSource& knot, int which, const RootContext& ctx) {
  const int N = ctx.N();
  if (which != 0 && which != N) throw DomainError("gamma_boundary: which must be 0 or N");
  const int m = which == 0 ? 2 * N : N;
  const int scale = which == 0 ? 4 * N : 2 * N;
  return ctx.xi() * qcalc::eval(qcalc::ddq(qcalc::brace(1) * knot.V(m)), ctx) / ComplexHP(scale);
}

ComplexHP gamma_boundary_mderiv(const KnotSource& knot, int which, const RootContext& ctx) {
  const int N = ctx.N();
  if (which != 0 && which != N) throw DomainError("gamma_boundary: which must be 0 or N");
  const int m = which == 0 ? 2 * N : N;
  const ComplexHP factor = scaled(brace_at(1, ctx), Real(N)) / ComplexHP(Real(0), 2 * ctx.pi());
  return factor * habiro::ddm_Vm(knot.habiro(2 * N - 1), m, ctx);
}

void alpha_beta(const KnotSource& knot, const RootContext& ctx, int framing, std::vector<ComplexHP>& alpha,
                std::vector<ComplexHP>& beta) {
  const int N = ctx.N();
  alpha.assign(N, ComplexHP());
  beta.assign(N, ComplexHP());
  const ComplexHP b1 = brace_at(1, ctx);
  for (int s = 1; s <= N - 1; ++s) {
    const ComplexHP v = qcalc::eval(knot.V_framed(s, framing), ctx);
    const ComplexHP nb1v = scaled(b1 * v, Real(N));
    alpha[s] = (N + s) % 2 == 0 ? nb1v : -nb1v;
    beta[s] = scaled(nb1v, Real(-framing));
  }
}

CenterCoeffs center_coeffs(const KnotSource& knot, const RootContext& ctx, Route route) {
  const int N = ctx.N();
  CenterCoeffs c;
  c.N = N;
  c.knot = knot.name();
  c.framing = 0;
  alpha_beta(knot, ctx, 0, c.alpha, c.beta);
  c.idem.assign(N + 1, ComplexHP());
  c.gamma.assign(N + 1, ComplexHP());
  c.rad_plus.assign(N, ComplexHP());
  c.rad_minus.assign(N, ComplexHP());

  c.gamma[0] = gamma_boundary(knot, 0, ctx);
  c.gamma[N] = gamma_boundary(knot, N, ctx);
  c.idem[0] = c.gamma[0];
  c.idem[N] = -c.gamma[N];
  for (int s = 1; s <= N - 1; ++s) {
    c.idem[s] = qcalc::eval(knot.V_tilde(s), ctx);
    c.gamma[s] = gamma_s(knot, s, route, ctx);
    if (route == Route::QDERIV) {
      c.rad_plus[s] = b_pm_via_derivative(knot, s, Sign::Plus, ctx);
      c.rad_minus[s] = b_pm_via_derivative(knot, s, Sign::Minus, ctx);
    } else {
      c.rad_plus[s] = c.rad_minus[s] = b_pm_via_habiro(knot.habiro(2 * N - 1), s, ctx);
    }
  }
  return c;
}

CenterCoeffs framed_corrections(const CenterCoeffs& base, int f, const RootContext& ctx) {
  const int N = base.N;
  if (N != ctx.N()) throw DomainError("framed_corrections: context N does not match");
  CenterCoeffs c = base;
  c.framing = base.framing + f;
  const ComplexHP b1 = brace_at(1, ctx);

  const ComplexHP phase0 = half_phase(static_cast<long>(4 * N * N - 1) * f, ctx);
  const ComplexHP phaseN = half_phase(static_cast<long>(N * N - 1) * f, ctx);
  c.gamma[0] = phase0 * base.gamma[0];
  c.gamma[N] = phaseN * base.gamma[N];
  c.idem[0] = c.gamma[0];
  c.idem[N] = -c.gamma[N];
  for (int s = 1; s <= N - 1; ++s) {
    const ComplexHP phase = half_phase(static_cast<long>(s * s - 1) * f, ctx);
    // V_s at the old framing, read back from alpha.
    ComplexHP v_old = base.alpha[s] / scaled(b1, Real(N));
    if ((N + s) % 2 != 0) v_old = -v_old;
    const ComplexHP v_new = phase * v_old;
    const ComplexHP qs = qint_at(s, ctx);
    const ComplexHP corr = scaled(b1 * v_new, Real(f)) / (qs * qs);

    c.rad_plus[s] = phase * base.rad_plus[s] + scaled(corr, Real(s - N));
    c.rad_minus[s] = phase * base.rad_minus[s] + scaled(corr, Real(s));
    c.idem[s] = phase * base.idem[s];
    c.alpha[s] = phase * base.alpha[s];
    c.beta[s] = base.beta[s] * phase + scaled(b1 * v_new, Real(-N * f));
    c.gamma[s] = phase * base.gamma[s];
  }
  return c;
}

void basis_change(const std::vector<ComplexHP>& idem, const std::vector<ComplexHP>& b_plus,
                  const std::vector<ComplexHP>& b_minus, const RootContext& ctx, std::vector<ComplexHP>& alpha,
                  std::vector<ComplexHP>& beta, std::vector<ComplexHP>& gamma) {
  const int N = ctx.N();
  if (static_cast<int>(idem.size()) != N + 1 || static_cast<int>(b_plus.size()) != N ||
      static_cast<int>(b_minus.size()) != N)
    throw DomainError("basis_change: expected idem of length N+1 and radical vectors of length N");
  alpha.assign(N, ComplexHP());
  beta.assign(N, ComplexHP());
  gamma.assign(N + 1, ComplexHP());
  gamma[0] = idem[0];
  gamma[N] = -idem[N];
  for (int s = 1; s <= N - 1; ++s) {
    const ComplexHP qs = qint_at(s, ctx);
    const ComplexHP q2 = qs * qs;
    const ComplexHP a = scaled(brace_at(s, ctx) * idem[s], Real(N));
    alpha[s] = (N + s) % 2 == 0 ? a : -a;
    beta[s] = q2 * (b_plus[s] - b_minus[s]);
    gamma[s] = q2 * (scaled(b_plus[s], Real(s) / N) + scaled(b_minus[s], Real(N - s) / N)) +
               qcalc::brace_plus(s, ctx) * idem[s];
  }
}

void basis_change_inverse(const std::vector<ComplexHP>& alpha, const std::vector<ComplexHP>& beta,
                          const std::vector<ComplexHP>& gamma, const RootContext& ctx, std::vector<ComplexHP>& idem,
                          std::vector<ComplexHP>& b_plus, std::vector<ComplexHP>& b_minus) {
  const int N = ctx.N();
  if (static_cast<int>(gamma.size()) != N + 1 || static_cast<int>(alpha.size()) != N ||
      static_cast<int>(beta.size()) != N)
    throw DomainError("basis_change_inverse: expected gamma of length N+1 and alpha, beta of length N");
  idem.assign(N + 1, ComplexHP());
  b_plus.assign(N, ComplexHP());
  b_minus.assign(N, ComplexHP());
  idem[0] = gamma[0];
  idem[N] = -gamma[N];
  for (int s = 1; s <= N - 1; ++s) {
    const ComplexHP qs = qint_at(s, ctx);
    const ComplexHP q2 = qs * qs;
    ComplexHP a = alpha[s] / scaled(brace_at(s, ctx), Real(N));
    if ((N + s) % 2 != 0) a = -a;
    idem[s] = a;
    const ComplexHP diff = beta[s] / q2;
    const ComplexHP weighted = (gamma[s] - qcalc::brace_plus(s, ctx) * a) / q2;
    b_minus[s] = weighted - scaled(diff, Real(s) / N);
    b_plus[s] = b_minus[s] + diff;
  }
}

}  // namespace logjones::loginv
