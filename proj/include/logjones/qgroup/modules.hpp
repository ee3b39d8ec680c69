#pragma once

#include <string>
#include <vector>

#include "logjones/jones/matrix.hpp"
#include "logjones/jones/weight_rep.hpp"
#include "logjones/qcalc/complex_hp.hpp"
#include "logjones/qcalc/root_context.hpp"

namespace logjones::qgroup {

using qcalc::ComplexHP;
using qcalc::Real;
using qcalc::RootContext;
using HPMatrix = jones::Matrix<ComplexHP>;

enum class ModuleKind { U, V, P, Y };

/// A module of the restricted quantum group at q = xi, as explicit matrices.
/// `weight_exp[i]` is the exponent w in (-N, N] with K e_i = xi^w e_i; it also
/// serves as the eigenvalue of H (w = 0 when K e_i = e_i).
struct RestrictedModule {
  ModuleKind kind = ModuleKind::U;
  int sign = 1;
  int index = 0;
  int N = 0;
  int dim = 0;
  HPMatrix matE, matF, matK;
  std::vector<int> weight_exp;
  std::vector<std::string> basis_labels;

  std::string name() const;
  /// Position of a basis label such as "b_0" or "beta_2"; throws if absent.
  int position(const std::string& label) const;
};

/// U_s^+- and V_s^+- (1 <= s <= N), P_s^+- (1 <= s <= N-1, P_s^- uses the
/// basis of the display for P_{N-s'}^- with s' = N - s), and Y_m^+- at xi
/// (1 <= m <= N-1).
RestrictedModule build_restricted(ModuleKind kind, int sign, int index, const RootContext& ctx);

/// Y_m^+ (dimension 2N) or Y_m^- (dimension 4N) at generic q.
jones::WeightRep build_Y(int m, int sign, int N);

/// W_m and Y_m^+- evaluated at xi with the same bookkeeping as restricted modules.
RestrictedModule specialize(const jones::WeightRep& V, ModuleKind kind, int sign, int index,
                            std::vector<std::string> labels, const RootContext& ctx);

/// Frobenius norm.
Real norm(const HPMatrix& m);

/// Residuals of E^N, F^N, K^{2N} - 1, K E K^{-1} - xi^2 E, K F K^{-1} - xi^{-2} F
/// and {1}(EF - FE) - (K - K^{-1}), in that order.
std::vector<Real> relation_residuals(const RestrictedModule& M, const RootContext& ctx);
bool satisfies_relations(const RestrictedModule& M, const RootContext& ctx);

}  // namespace logjones::qgroup
