#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "logjones/habiro/habiro.hpp"
#include "logjones/jones/braid.hpp"

namespace logjones::loginv {

using qcalc::LaurentPoly;

/// Supplies exact 0-framed colored Jones polynomials and Habiro coefficients
/// for one knot. Catalog knots reconstruct V_m from their Habiro sequence;
/// other braids use exact braid traces up to a color bound.
class KnotSource {
 public:
  static constexpr int kMaxBraidColor = 12;

  static KnotSource catalog(const std::string& name);
  /// `habiro_terms` coefficients are extracted from V_1..V_{habiro_terms}.
  static KnotSource from_braid(const jones::BraidWord& b, int habiro_terms);

  const std::string& name() const { return name_; }
  bool is_catalog() const { return !braid_.has_value(); }

  /// Exact V_m with framing 0. Throws FeasibilityError / RouteUnavailable.
  const LaurentPoly& V(int m) const;
  /// V_m(L^f) = q^{(m^2-1) f / 2} V_m(L).
  LaurentPoly V_framed(int m, int f) const;
  /// Normalized V_m / [m], exact.
  LaurentPoly V_tilde(int m, int f = 0) const;

  /// Habiro coefficients with a_0..a_{i_max} available (catalog knots extend).
  habiro::HabiroCoeffs habiro(int i_max) const;

 private:
  KnotSource() = default;

  std::string name_;
  std::optional<jones::BraidWord> braid_;
  struct Cache {
    std::mutex mu;
    std::map<int, LaurentPoly> values;
    habiro::HabiroCoeffs coeffs;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace logjones::loginv
