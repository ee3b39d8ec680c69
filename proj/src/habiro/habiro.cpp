#include "logjones/habiro/habiro.hpp"

#include <string>

#include "logjones/error.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::habiro {

namespace {

// (exp2, numerator, denominator) triples of a_i(3_1), produced by tools/derive_habiro.
struct FrozenTerm {
  int exp2;
  long num;
  long den;
};

#include "trefoil_table.inc"

LaurentPoly from_frozen(const std::vector<FrozenTerm>& terms) {
  LaurentPoly p;
  for (const auto& t : terms) p += LaurentPoly::monomial(mpq_class(t.num, t.den), t.exp2);
  return p;
}

ComplexHP brace_at(int k, const RootContext& ctx) { return ctx.xi_power(k) - ctx.xi_power(-k); }

}  // namespace

int trefoil_table_size() { return static_cast<int>(kTrefoilTable.size()) - 1; }

LaurentPoly HabiroCoeffs::coeff(int i) const {
  if (i < 0) throw DomainError("Habiro index must be >= 0");
  if (i < static_cast<int>(coeffs.size())) return coeffs[i];
  if (catalog) return catalog_coeffs(knot, i).coeffs[i];
  throw RouteUnavailable("Habiro coefficient a_" + std::to_string(i) + " of '" + knot +
                         "' is not available (known up to i = " + std::to_string(i_max()) + ")");
}

LaurentPoly cyclotomic_term(int m, int i) {
  return qcalc::exact_divide(qcalc::brace_falling(m + i, 2 * i + 1), qcalc::brace(1));
}

HabiroCoeffs extract_coeffs(const std::vector<LaurentPoly>& jones_values, const std::string& knot) {
  HabiroCoeffs h{knot, {}, false};
  for (std::size_t k = 0; k < jones_values.size(); ++k) {
    const int m = static_cast<int>(k) + 1;
    LaurentPoly rest = jones_values[k];
    for (int i = 0; i < m - 1; ++i) rest -= h.coeffs[i] * cyclotomic_term(m, i);
    h.coeffs.push_back(qcalc::exact_divide(rest, cyclotomic_term(m, m - 1)));
  }
  return h;
}

LaurentPoly reconstruct_Vm(const HabiroCoeffs& h, int m) {
  if (m < 1) throw DomainError("reconstruct_Vm requires m >= 1");
  LaurentPoly v;
  for (int i = 0; i < m; ++i) v += h.coeff(i) * cyclotomic_term(m, i);
  return v;
}

HabiroCoeffs catalog_coeffs(const std::string& knot, int i_max) {
  HabiroCoeffs h{knot, {}, true};
  if (knot == "unknot") {
    for (int i = 0; i <= i_max; ++i) h.coeffs.emplace_back(i == 0 ? 1 : 0);
  } else if (knot == "4_1") {
    h.coeffs.assign(i_max + 1, LaurentPoly(1));
  } else if (knot == "3_1") {
    if (i_max > trefoil_table_size())
      throw RouteUnavailable("trefoil Habiro table stops at i = " + std::to_string(trefoil_table_size()));
    for (int i = 0; i <= i_max; ++i) h.coeffs.push_back(from_frozen(kTrefoilTable[i]));
  } else {
    throw DomainError("no catalog Habiro coefficients for '" + knot + "'");
  }
  return h;
}

int vanishing_factor_count(int s, int i, int N) {
  int count = 0;
  for (int k = s - i; k <= s + i; ++k)
    if (k % N == 0) ++count;
  return count;
}

ComplexHP ddm_Vm(const HabiroCoeffs& h, int s, const RootContext& ctx) {
  const int N = ctx.N();
  if (s < 1 || s > 2 * N) throw DomainError("ddm_Vm requires 1 <= s <= 2N");
  for (int i = 2 * N; i <= 3 * N; ++i)
    if (vanishing_factor_count(s, i, N) < 2)
      throw LimitError("truncation check failed: term i = " + std::to_string(i) +
                       " has fewer than two vanishing factors");

  const ComplexHP d_ln_q(qcalc::Real(0), ctx.pi() / N);
  ComplexHP total;
  for (int i = 0; i <= 2 * N - 1; ++i) {
    const int zeros = vanishing_factor_count(s, i, N);
    if (zeros >= 2) continue;
    const ComplexHP a = qcalc::eval(h.coeff(i), ctx);
    if (qcalc::is_zero_scalar(a)) continue;
    ComplexHP term;
    if (zeros == 0) {
      ComplexHP product(1), log_sum;
      for (int k = s - i; k <= s + i; ++k) {
        const ComplexHP b = brace_at(k, ctx);
        product *= b;
        log_sum += qcalc::brace_plus(k, ctx) / b;
      }
      term = product * log_sum;
    } else {
      ComplexHP product(1);
      for (int k = s - i; k <= s + i; ++k)
        product *= k % N == 0 ? qcalc::brace_plus(k, ctx) : brace_at(k, ctx);
      term = product;
    }
    total += a * term;
  }
  return total * d_ln_q / brace_at(1, ctx);
}

}  // namespace logjones::habiro
