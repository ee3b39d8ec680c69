#pragma once

#include "logjones/jones/tensor.hpp"
#include "logjones/jones/weight_rep.hpp"

namespace logjones::jones {

using PolyOperator = TensorOperator<qcalc::LaurentPoly>;

/// The n-th summand of the universal R-matrix on V1 (x) V2, kept as a
/// fraction: numerator is q^{H(x)H/2} {1}^n q^{n(n-1)/2} (E^n (x) F^n) and the
/// denominator is [n]!.
struct RTerm {
  PolyOperator numerator;
  qcalc::LaurentPoly denominator;
};

RTerm rmatrix_term(const WeightRep& V1, const WeightRep& V2, int n);

/// Smallest n with E^n = 0 on V1 or F^n = 0 on V2.
int nilpotency_bound(const WeightRep& V1, const WeightRep& V2);

/// R = q^{H(x)H/2} sum_n {1}^{2n}/{n}! q^{n(n-1)/2} E^n (x) F^n, truncated at the
/// nilpotency bound. Each [n]! division must be exact on the given modules.
PolyOperator rmatrix(const WeightRep& V1, const WeightRep& V2);

/// R^{-1} = sum_n (-1)^n {1}^{2n}/{n}! q^{-n(n-1)/2} (E^n (x) F^n) q^{-H(x)H/2}.
PolyOperator rmatrix_inverse(const WeightRep& V1, const WeightRep& V2);

/// An operator with a common scalar denominator.
struct FracOperator {
  PolyOperator numerator;
  qcalc::LaurentPoly denominator;
};

/// R (or R^{-1}) over a common denominator, for modules on which [n]! does not
/// divide the n-th summand. The denominator starts as [B-1]! (B the
/// nilpotency bound) and keeps only the cyclotomic factors some entry needs.
FracOperator rmatrix_fraction(const WeightRep& V1, const WeightRep& V2, bool inverse = false);

/// Braiding c = P o R on V (x) V and its inverse R^{-1} o P.
PolyOperator braiding(const WeightRep& V);
PolyOperator braiding_inverse(const WeightRep& V);

/// Tensor-factor swap on V_a (x) V_b, landing in V_b (x) V_a.
template <class T>
TensorOperator<T> flip_output(const TensorOperator<T>& op) {
  const std::size_t da = op.factor_dims[0], db = op.factor_dims[1];
  TensorOperator<T> r{{op.factor_dims[1], op.factor_dims[0]}, std::vector<SparseVector<T>>(op.dim())};
  for (std::size_t j = 0; j < op.dim(); ++j) {
    for (const auto& [i, v] : op.columns[j]) r.columns[j].emplace_back((i % db) * da + i / db, v);
    std::sort(r.columns[j].begin(), r.columns[j].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return r;
}

/// op o P for an operator on V (x) V.
template <class T>
TensorOperator<T> flip_input(const TensorOperator<T>& op) {
  const std::size_t d = op.factor_dims[0];
  TensorOperator<T> r{op.factor_dims, std::vector<SparseVector<T>>(op.dim())};
  for (std::size_t j = 0; j < op.dim(); ++j) r.columns[(j % d) * d + j / d] = op.columns[j];
  return r;
}

}  // namespace logjones::jones
