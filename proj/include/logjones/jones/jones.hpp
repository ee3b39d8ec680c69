#pragma once

#include <vector>

#include "logjones/jones/braid.hpp"
#include "logjones/jones/rmatrix.hpp"
#include "logjones/jones/weight_rep.hpp"

namespace logjones::jones {

/// rho(b) on V^{(x)n} built from a braiding and its inverse on V (x) V.
template <class T>
TensorOperator<T> braid_operator(const BraidWord& b, const TensorOperator<T>& c,
                                 const TensorOperator<T>& c_inv) {
  validate(b);
  const int d = c.factor_dims.at(0);
  const std::vector<int> dims(b.strands, d);
  TensorOperator<T> op = TensorOperator<T>::identity(dims);
  for (auto& col : op.columns)
    for (int g : b.word) col = apply_gate(g > 0 ? c : c_inv, dims, std::abs(g) - 1, col);
  return op;
}

/// Exact rho_m^{(n)}(b) on W^{(x)n} for a generic-q weight representation.
PolyOperator braid_operator(const BraidWord& b, const WeightRep& V);

/// tr(K^{(x)n} op), where k_diag holds the eigenvalues of K on one factor.
template <class T>
T quantum_trace(const TensorOperator<T>& op, const std::vector<T>& k_diag) {
  const auto strides = tensor_strides(op.factor_dims);
  const std::size_t d = k_diag.size();
  T sum(0);
  for (std::size_t j = 0; j < op.dim(); ++j)
    for (const auto& [i, v] : op.columns[j]) {
      if (i != j) continue;
      T w = v;
      for (std::size_t s : strides) w = w * k_diag[(j / s) % d];
      sum += w;
    }
  return sum;
}

/// Partial trace over the right n-1 factors with K inserted on each of them.
template <class T>
Matrix<T> partial_trace(const TensorOperator<T>& op, const std::vector<T>& k_diag) {
  const std::size_t d = k_diag.size();
  const std::size_t rest = op.dim() / d;
  const auto strides = tensor_strides(op.factor_dims);
  Matrix<T> out(d, d);
  for (std::size_t j = 0; j < op.dim(); ++j) {
    const std::size_t j1 = j / rest, tail = j % rest;
    for (const auto& [i, v] : op.columns[j]) {
      if (i % rest != tail) continue;
      T w = v;
      for (std::size_t p = 1; p < strides.size(); ++p) w = w * k_diag[(j / strides[p]) % d];
      out(i / rest, j1) += w;
    }
  }
  return out;
}

std::vector<qcalc::LaurentPoly> k_eigenvalues(const WeightRep& V);

/// V_m of the closure of b with the blackboard framing (writhe). Throws
/// NotAKnot for multi-component closures.
qcalc::LaurentPoly colored_jones(const BraidWord& b, int m);

/// The same with framing converted to 0.
qcalc::LaurentPoly colored_jones_framing0(const BraidWord& b, int m);

/// Partial trace on V of an operator on V^{(x)n}.
PolyMatrix partial_trace(const PolyOperator& op, const WeightRep& V);

/// Multiply by q^{-(m^2-1) w / 2}: writhe-w framing to framing 0.
qcalc::LaurentPoly framing_adjust(const qcalc::LaurentPoly& p, int w, int m);

}  // namespace logjones::jones
