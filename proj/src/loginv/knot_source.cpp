#include "logjones/loginv/knot_source.hpp"

#include "logjones/error.hpp"
#include "logjones/jones/jones.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::loginv {

KnotSource KnotSource::catalog(const std::string& name) {
  if (!jones::is_catalog_knot(name)) throw DomainError("unknown catalog knot '" + name + "'");
  KnotSource k;
  k.name_ = name;
  k.cache_->coeffs = habiro::catalog_coeffs(name, 0);
  return k;
}

KnotSource KnotSource::from_braid(const jones::BraidWord& b, int habiro_terms) {
  jones::validate(b);
  if (!b.closes_to_knot()) throw NotAKnot("closure of " + b.to_string() + " is not a knot");
  if (habiro_terms > kMaxBraidColor)
    throw FeasibilityError("braid traces are limited to colors m <= " + std::to_string(kMaxBraidColor));
  KnotSource k;
  k.name_ = b.name.empty() ? b.to_string() : b.name;
  k.braid_ = b;
  std::vector<LaurentPoly> values;
  for (int m = 1; m <= habiro_terms; ++m) values.push_back(k.V(m));
  k.cache_->coeffs = habiro::extract_coeffs(values, k.name_);
  return k;
}

const LaurentPoly& KnotSource::V(int m) const {
  if (m < 1) throw DomainError("color m must be >= 1");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->values.find(m);
  if (it != cache_->values.end()) return it->second;
  LaurentPoly v;
  if (braid_) {
    if (m > kMaxBraidColor)
      throw FeasibilityError("exact V_" + std::to_string(m) + " of a braid exceeds the color bound " +
                             std::to_string(kMaxBraidColor));
    v = jones::colored_jones_framing0(*braid_, m);
  } else {
    const int needed = m - 1;
    if (static_cast<int>(cache_->coeffs.coeffs.size()) <= needed)
      cache_->coeffs = habiro::catalog_coeffs(name_, needed);
    v = habiro::reconstruct_Vm(cache_->coeffs, m);
  }
  return cache_->values.emplace(m, std::move(v)).first->second;
}

LaurentPoly KnotSource::V_framed(int m, int f) const { return V(m).shifted((m * m - 1) * f); }

LaurentPoly KnotSource::V_tilde(int m, int f) const {
  return qcalc::exact_divide(V_framed(m, f), qcalc::qint(m));
}

habiro::HabiroCoeffs KnotSource::habiro(int i_max) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->coeffs.i_max() < i_max) {
    if (braid_)
      throw RouteUnavailable("Habiro coefficients of " + name_ + " are known only up to i = " +
                             std::to_string(cache_->coeffs.i_max()));
    cache_->coeffs = habiro::catalog_coeffs(name_, i_max);
  }
  return cache_->coeffs;
}

}  // namespace logjones::loginv
