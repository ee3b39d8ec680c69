#include "logjones/jones/rmatrix.hpp"

#include <algorithm>
#include <map>

#include "logjones/error.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::jones {

using qcalc::LaurentPoly;

namespace {

// sum over n of coeff_n * (E^n (x) F^n) * scale / [n]!, with the Cartan factor
// q^{sign * w1 w2 / 2} applied on the output side (R) or input side (R^{-1}).
PolyOperator assemble(const WeightRep& V1, const WeightRep& V2, bool inverse,
                      const LaurentPoly& scale = LaurentPoly(1)) {
  const int bound = nilpotency_bound(V1, V2);
  const std::size_t d1 = V1.dim, d2 = V2.dim;
  PolyOperator op{{V1.dim, V2.dim}, std::vector<SparseVector<LaurentPoly>>(d1 * d2)};
  std::vector<std::map<std::size_t, LaurentPoly>> acc(d1 * d2);

  PolyMatrix En = PolyMatrix::identity(d1), Fn = PolyMatrix::identity(d2);
  LaurentPoly brace1_n(1);
  LaurentPoly fact(1);
  for (int n = 0; n < bound; ++n) {
    if (n > 0) {
      En = V1.matE * En;
      Fn = V2.matF * Fn;
      brace1_n *= qcalc::brace(1);
      fact *= qcalc::qint(n);
    }
    const int qexp2 = inverse ? -n * (n - 1) : n * (n - 1);  // q^{+-n(n-1)/2}
    LaurentPoly c = brace1_n.shifted(qexp2);
    if (inverse && n % 2 == 1) c = -c;
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t a = 0; a < d1; ++a) {
        if (En(a, i).is_zero()) continue;
        for (std::size_t j = 0; j < d2; ++j)
          for (std::size_t b = 0; b < d2; ++b) {
            if (Fn(b, j).is_zero()) continue;
            LaurentPoly x = qcalc::exact_divide(En(a, i) * Fn(b, j) * scale, fact) * c;
            const int cartan = inverse ? -V1.weights[i] * V2.weights[j] : V1.weights[a] * V2.weights[b];
            x = x.shifted(cartan);
            acc[i * d2 + j][a * d2 + b] += x;
          }
      }
  }
  for (std::size_t col = 0; col < d1 * d2; ++col)
    for (auto& [row, v] : acc[col])
      if (!v.is_zero()) op.columns[col].emplace_back(row, std::move(v));
  return op;
}

}  // namespace

int nilpotency_bound(const WeightRep& V1, const WeightRep& V2) {
  PolyMatrix En = PolyMatrix::identity(V1.dim), Fn = PolyMatrix::identity(V2.dim);
  for (int n = 0;; ++n) {
    if (En.is_zero() || Fn.is_zero()) return n;
    En = V1.matE * En;
    Fn = V2.matF * Fn;
  }
}

RTerm rmatrix_term(const WeightRep& V1, const WeightRep& V2, int n) {
  if (n < 0) throw DomainError("rmatrix_term requires n >= 0");
  const PolyMatrix En = matrix_power(V1.matE, n);
  const PolyMatrix Fn = matrix_power(V2.matF, n);
  const std::size_t d1 = V1.dim, d2 = V2.dim;
  const LaurentPoly c = qcalc::pow(qcalc::brace(1), n).shifted(n * (n - 1));
  PolyOperator op{{V1.dim, V2.dim}, std::vector<SparseVector<LaurentPoly>>(d1 * d2)};
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      auto& col = op.columns[i * d2 + j];
      for (std::size_t a = 0; a < d1; ++a) {
        if (En(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < d2; ++b) {
          if (Fn(b, j).is_zero()) continue;
          col.emplace_back(a * d2 + b, (En(a, i) * Fn(b, j) * c).shifted(V1.weights[a] * V2.weights[b]));
        }
      }
    }
  return {std::move(op), qcalc::qfact(n)};
}

PolyOperator rmatrix(const WeightRep& V1, const WeightRep& V2) { return assemble(V1, V2, false); }

PolyOperator rmatrix_inverse(const WeightRep& V1, const WeightRep& V2) { return assemble(V1, V2, true); }

FracOperator rmatrix_fraction(const WeightRep& V1, const WeightRep& V2, bool inverse) {
  const int bound = nilpotency_bound(V1, V2);
  const int top = std::max(bound - 1, 0);
  FracOperator r{assemble(V1, V2, inverse, qcalc::qfact(top)), qcalc::qfact(top)};
  // [k] = q^{..} prod Phi_d(q^{1/2}) over d | 4k with d not dividing 4.
  std::map<int, int> mult;
  for (int k = 2; k <= top; ++k)
    for (int d = 1; d <= 4 * k; ++d)
      if ((4 * k) % d == 0 && 4 % d != 0) ++mult[d];
  for (auto& [d, e] : mult) {
    const LaurentPoly phi = qcalc::cyclotomic_half(d);
    for (; e > 0; --e) {
      PolyOperator trial = r.numerator;
      bool ok = true;
      for (auto& col : trial.columns) {
        for (auto& [row, v] : col)
          if (!qcalc::divide_if_exact(v, phi)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) break;
      r.numerator = std::move(trial);
      r.denominator = qcalc::exact_divide(r.denominator, phi);
    }
  }
  return r;
}

PolyOperator braiding(const WeightRep& V) { return flip_output(rmatrix(V, V)); }

PolyOperator braiding_inverse(const WeightRep& V) { return flip_input(rmatrix_inverse(V, V)); }

}  // namespace logjones::jones
