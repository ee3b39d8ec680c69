#pragma once

#include <string>
#include <vector>

#include "logjones/qcalc/complex_hp.hpp"
#include "logjones/qcalc/laurent_poly.hpp"
#include "logjones/qcalc/root_context.hpp"

namespace logjones::habiro {

using qcalc::ComplexHP;
using qcalc::LaurentPoly;
using qcalc::RootContext;

/// Cyclotomic expansion V_m = sum_i a_i {m+i, 2i+1} / {1} of a 0-framed knot.
struct HabiroCoeffs {
  std::string knot;
  std::vector<LaurentPoly> coeffs;
  /// Catalog knots know every a_i; otherwise only coeffs.size() are available.
  bool catalog = false;

  int i_max() const { return static_cast<int>(coeffs.size()) - 1; }
  /// a_i, extending catalog sequences as needed. Throws RouteUnavailable.
  LaurentPoly coeff(int i) const;
};

/// The i-th basis polynomial {m+i, 2i+1}/{1}.
LaurentPoly cyclotomic_term(int m, int i);

/// Forward substitution from exact 0-framed V_1..V_M (jones_values[m-1] = V_m).
/// Throws InexactDivision if the values are not a cyclotomic expansion.
HabiroCoeffs extract_coeffs(const std::vector<LaurentPoly>& jones_values, const std::string& knot = "");

/// sum_{i<m} a_i {m+i, 2i+1}/{1}. Throws RouteUnavailable past the known range.
LaurentPoly reconstruct_Vm(const HabiroCoeffs& h, int m);

/// Catalog coefficients a_0..a_{i_max}: "unknot", "4_1" (a_i = 1) and "3_1"
/// (frozen table). Throws DomainError for other names and RouteUnavailable
/// past the trefoil table.
HabiroCoeffs catalog_coeffs(const std::string& knot, int i_max);
/// Largest index stored for the trefoil.
int trefoil_table_size();

/// d/dm of the cyclotomic expansion at m = s and q = xi, where
/// d/dm q^{m+c} = (pi i / N) q^{m+c}. Needs a_i for i <= 2N-1.
ComplexHP ddm_Vm(const HabiroCoeffs& h, int s, const RootContext& ctx);

/// Number of factors of {s+i, 2i+1} that vanish at xi.
int vanishing_factor_count(int s, int i, int N);

}  // namespace logjones::habiro
