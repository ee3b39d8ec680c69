#include "logjones/jones/jones.hpp"

#include "logjones/error.hpp"

namespace logjones::jones {

using qcalc::LaurentPoly;

PolyOperator braid_operator(const BraidWord& b, const WeightRep& V) {
  return braid_operator(b, braiding(V), braiding_inverse(V));
}

std::vector<LaurentPoly> k_eigenvalues(const WeightRep& V) {
  std::vector<LaurentPoly> k;
  for (int w : V.weights) k.push_back(LaurentPoly::q_power(w));
  return k;
}

LaurentPoly colored_jones(const BraidWord& b, int m) {
  validate(b);
  if (!b.closes_to_knot())
    throw NotAKnot("closure of " + b.to_string() + " has " + std::to_string(b.component_count()) +
                   " components");
  const WeightRep V = build_Wm(m);
  return quantum_trace(braid_operator(b, V), k_eigenvalues(V));
}

LaurentPoly colored_jones_framing0(const BraidWord& b, int m) {
  return framing_adjust(colored_jones(b, m), b.writhe(), m);
}

PolyMatrix partial_trace(const PolyOperator& op, const WeightRep& V) {
  return partial_trace(op, k_eigenvalues(V));
}

LaurentPoly framing_adjust(const LaurentPoly& p, int w, int m) { return p.shifted(-(m * m - 1) * w); }

}  // namespace logjones::jones
