#pragma once

#include <string>
#include <vector>

#include "logjones/jones/braid.hpp"
#include "logjones/jones/weight_rep.hpp"
#include "logjones/qgroup/modules.hpp"

namespace logjones::qgroup {

/// A linear map between two modules and the module pair it is checked on.
struct Intertwiner {
  RestrictedModule source, target;
  HPMatrix mat;
};

/// Printed: the maps exactly as displayed. SignCorrected: f(y_k) and h(b_k)
/// without the alternating factor (-1)^k, which is what the module actions
/// force along the alpha_{N+k} and alpha_{2N+k} chains.
enum class MapVariant { Printed, SignCorrected };

/// f: P_m^+ -> Y_m^+.
Intertwiner iso_f(int m, const RootContext& ctx, MapVariant v = MapVariant::Printed);
/// g: P_{N-m}^- -> Y_m^-, landing in the span Y1 of the first N+m alphas and
/// first N-m betas.
Intertwiner iso_g(int m, const RootContext& ctx);
/// h: P_{N-m}^- -> Y_m^-/Y1, with the quotient written in the remaining basis.
Intertwiner iso_h(int m, const RootContext& ctx, MapVariant v = MapVariant::Printed);

/// max over X in {E, F, K} of |mat rho_source(X) - rho_target(X) mat| (Frobenius).
Real intertwiner_residual(const Intertwiner& f);
Real verify_iso_f(int m, const RootContext& ctx, MapVariant v = MapVariant::Printed);
Real verify_iso_g(int m, const RootContext& ctx);
Real verify_iso_h(int m, const RootContext& ctx, MapVariant v = MapVariant::Printed);

/// Norm of the block of E, F, K on Y_m^- mapping Y1 into its complement.
Real y1_invariance_residual(int m, const RootContext& ctx);

struct SpecializationReport {
  bool ok = true;
  std::string detail;  ///< first offending (n, entry), empty when ok
};

/// For each summand n of the R-matrix on V1 (x) V2, the limit q -> xi of every
/// entry of {1}^n q^{..}(E^n (x) F^n)/[n]! must be finite, and 0 when n >= N.
SpecializationReport rmatrix_specialization_check(const jones::WeightRep& V1, const jones::WeightRep& V2,
                                                  const RootContext& ctx);

constexpr int kEtaMaxNTwoStrand = 5;
constexpr int kEtaMaxNThreeStrand = 3;

/// Partial trace of rho_{Y_m^+-}(b) over the right n-1 factors, computed at
/// generic q as numerator/denominator and taken to the limit q -> xi entrywise.
/// The closure carries the blackboard framing (the writhe of b).
struct EtaResult {
  int m = 0, sign = 1, writhe = 0;
  jones::PolyMatrix numerator;
  qcalc::LaurentPoly denominator;
  HPMatrix at_xi;
  /// The off-block entry: (beta_0, alpha_{N-m}) for +, (beta_0, alpha_m) for -.
  ComplexHP x0;
};

EtaResult eta_partial_trace(const jones::BraidWord& b, int m, int sign, const RootContext& ctx);

/// b_m^+ = x0/[m] and b_m^- = (-1)^m x0/[m].
ComplexHP x0_to_b(const ComplexHP& x0, int m, int sign, const RootContext& ctx);

struct CheckResult {
  std::string check;
  std::string parameters;
  Real residual;
  bool pass = false;
};

/// Realizes e_s (0 <= s <= N) and w_s^+- (1 <= s <= N-1) on U_N^+-, P_s^+ and
/// P_s^-, checks that each commutes with E, F, K, and checks the product
/// relations e_s e_t = delta e_s, e_s w_t = delta w_t, w w = 0 module by module.
std::vector<CheckResult> center_action_check(const RootContext& ctx);

/// Defining relations, weights, intertwiners (both variants of f and h) and
/// Y1 invariance for one N.
std::vector<CheckResult> structure_checks(const RootContext& ctx);

}  // namespace logjones::qgroup
