#pragma once

#include <vector>

#include "logjones/jones/matrix.hpp"
#include "logjones/qcalc/laurent_poly.hpp"

namespace logjones::jones {

using PolyMatrix = Matrix<qcalc::LaurentPoly>;

/// Finite-dimensional weight representation of U_q(sl2) at generic q.
/// K acts diagonally as q^{weights[i]}; H acts as weights[i].
struct WeightRep {
  int dim = 0;
  PolyMatrix matE, matF, matK;
  std::vector<int> weights;

  /// Builds matK from the weights.
  static WeightRep from_actions(PolyMatrix E, PolyMatrix F, std::vector<int> weights);
  /// K^{-1}
  PolyMatrix matK_inverse() const;
};

/// Irreducible W_m: E f_i = [i] f_{i-1}, F f_i = [m-1-i] f_{i+1}, K f_i = q^{m-1-2i} f_i.
WeightRep build_Wm(int m);

/// KE = q^2 EK, KF = q^{-2} FK and {1}(EF - FE) = K - K^{-1}, all exact.
bool satisfies_relations(const WeightRep& V);

}  // namespace logjones::jones
