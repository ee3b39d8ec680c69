#pragma once

#include <string>
#include <vector>

#include "logjones/habiro/habiro.hpp"
#include "logjones/loginv/knot_source.hpp"
#include "logjones/qcalc/complex_hp.hpp"
#include "logjones/qcalc/root_context.hpp"

namespace logjones::loginv {

using qcalc::ComplexHP;
using qcalc::RootContext;

enum class Route { QDERIV, HABIRO, MDERIV };
const char* route_name(Route r);

enum class Sign { Plus, Minus };

/// Coefficients of a knot's center element in the idempotent/radical basis and
/// in the good basis. Index conventions: idem and gamma run over 0..N; the
/// other vectors over 1..N-1 and are stored with a dummy zero at index 0.
struct CenterCoeffs {
  int N = 0;
  std::string knot;
  int framing = 0;
  std::vector<ComplexHP> idem, rad_plus, rad_minus, alpha, beta, gamma;
};

/// ~{n, j}: prod_{k<j} {n-k} at xi, with a factor at n-k = N t replaced by (-1)^t.
ComplexHP tilde_brace(int n, int j, const RootContext& ctx);

/// b_s^+ or b_s^- by differentiating {1}_q V_m/[m]_q with the quotient rule.
ComplexHP b_pm_via_derivative(const KnotSource& knot, int s, Sign sign, const RootContext& ctx,
                              int framing = 0);
/// The same quantity from exact normalized invariants V~_m = V_m/[m].
ComplexHP b_pm_via_centervalue(const KnotSource& knot, int s, Sign sign, const RootContext& ctx,
                               int framing = 0);

/// Denominator of the first Habiro sum for b: {s+i}!/(D {s-i-1}!).
enum class HabiroPrefactor {
  BraceS,    ///< D = {s}
  BracketS,  ///< D = [s]
};

/// Closed Habiro form of b_s^+ = b_s^- for framing 0.
ComplexHP b_pm_via_habiro(const habiro::HabiroCoeffs& h, int s, const RootContext& ctx,
                          HabiroPrefactor prefactor = HabiroPrefactor::BraceS);

/// gamma_s for 1 <= s <= N-1 (framing 0). QDERIV and boundary values need
/// exact polynomials; HABIRO and MDERIV need a_i for i <= 2N-1.
ComplexHP gamma_s(const KnotSource& knot, int s, Route route, const RootContext& ctx);

/// gamma_0 (which = 0) or gamma_N (which = N) at framing 0 via l'Hopital.
ComplexHP gamma_boundary(const KnotSource& knot, int which, const RootContext& ctx);
/// The equivalent d/dq form: xi/(4N) d/dq {1} V_{2N} and xi/(2N) d/dq {1} V_N.
ComplexHP gamma_boundary_qderiv(const KnotSource& knot, int which, const RootContext& ctx);
/// The equivalent d/dm form: N{1}/(2 pi i) dV_m/dm at m = 2N or m = N.
ComplexHP gamma_boundary_mderiv(const KnotSource& knot, int which, const RootContext& ctx);

/// alpha_s = (-1)^{N+s} N {1} V_s(L^f) and beta_s = -N f {1} V_s(L^f) at xi.
void alpha_beta(const KnotSource& knot, const RootContext& ctx, int framing, std::vector<ComplexHP>& alpha,
                std::vector<ComplexHP>& beta);

/// All coefficients at framing 0, gamma_s through `route`.
CenterCoeffs center_coeffs(const KnotSource& knot, const RootContext& ctx, Route route = Route::HABIRO);

/// Framing change f applied to framing-0 coefficients. Needs V_s(L)|xi, which
/// is recovered from alpha.
CenterCoeffs framed_corrections(const CenterCoeffs& base, int f, const RootContext& ctx);

/// Good-basis coordinates from (a, b+, b-), and back.
void basis_change(const std::vector<ComplexHP>& idem, const std::vector<ComplexHP>& b_plus,
                  const std::vector<ComplexHP>& b_minus, const RootContext& ctx, std::vector<ComplexHP>& alpha,
                  std::vector<ComplexHP>& beta, std::vector<ComplexHP>& gamma);
void basis_change_inverse(const std::vector<ComplexHP>& alpha, const std::vector<ComplexHP>& beta,
                          const std::vector<ComplexHP>& gamma, const RootContext& ctx, std::vector<ComplexHP>& idem,
                          std::vector<ComplexHP>& b_plus, std::vector<ComplexHP>& b_minus);

}  // namespace logjones::loginv
