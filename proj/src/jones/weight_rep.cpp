#include "logjones/jones/weight_rep.hpp"

#include "logjones/error.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::jones {

using qcalc::LaurentPoly;

WeightRep WeightRep::from_actions(PolyMatrix E, PolyMatrix F, std::vector<int> weights) {
  WeightRep V;
  V.dim = static_cast<int>(weights.size());
  if (E.rows() != weights.size() || F.rows() != weights.size())
    throw DomainError("WeightRep: matrix size does not match weights");
  V.matE = std::move(E);
  V.matF = std::move(F);
  V.matK = PolyMatrix(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) V.matK(i, i) = LaurentPoly::q_power(weights[i]);
  V.weights = std::move(weights);
  return V;
}

PolyMatrix WeightRep::matK_inverse() const {
  PolyMatrix K(dim, dim);
  for (int i = 0; i < dim; ++i) K(i, i) = LaurentPoly::q_power(-weights[i]);
  return K;
}

WeightRep build_Wm(int m) {
  if (m < 1) throw DomainError("W_m requires m >= 1");
  PolyMatrix E(m, m), F(m, m);
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) {
    w[i] = m - 1 - 2 * i;
    if (i >= 1) E(i - 1, i) = qcalc::qint(i);
    if (i + 1 < m) F(i + 1, i) = qcalc::qint(m - 1 - i);
  }
  return WeightRep::from_actions(std::move(E), std::move(F), std::move(w));
}

bool satisfies_relations(const WeightRep& V) {
  const PolyMatrix& E = V.matE;
  const PolyMatrix& F = V.matF;
  const PolyMatrix& K = V.matK;
  const LaurentPoly q2 = LaurentPoly::q_power(2);
  const LaurentPoly qm2 = LaurentPoly::q_power(-2);
  if (!(K * E == q2 * (E * K))) return false;
  if (!(K * F == qm2 * (F * K))) return false;
  return qcalc::brace(1) * (E * F - F * E) == K - V.matK_inverse();
}

}  // namespace logjones::jones
