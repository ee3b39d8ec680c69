#include "logjones/qcalc/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "logjones/error.hpp"

namespace logjones::qcalc {

namespace {

bool all_integral(const std::vector<LaurentPoly::Term>& terms) {
  return std::all_of(terms.begin(), terms.end(),
                     [](const LaurentPoly::Term& t) { return t.coeff.get_den() == 1; });
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  if (v != 0) terms_.push_back({0, std::move(v)});
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int exp2) {
  LaurentPoly p;
  mpq_class v = c;
  v.canonicalize();
  if (v != 0) p.terms_.push_back({exp2, std::move(v)});
  return p;
}

mpq_class LaurentPoly::coeff(int exp2) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp2,
                             [](const Term& t, int e) { return t.exp2 < e; });
  if (it != terms_.end() && it->exp2 == exp2) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int exp2) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp2 += exp2;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exp2 = -t.exp2;
  return LaurentPoly(std::move(out));
}

double LaurentPoly::l1_norm_estimate() const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(t.coeff.get_d());
  return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp2 < b->exp2)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exp2 < a->exp2) {
      out.push_back({b->exp2, sign > 0 ? b->coeff : mpq_class(-b->coeff)});
      ++b;
    } else {
      mpq_class c = sign > 0 ? mpq_class(a->coeff + b->coeff) : mpq_class(a->coeff - b->coeff);
      if (c != 0) out.push_back({a->exp2, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    LaurentPoly r = b.shifted(a.terms_[0].exp2);
    if (a.terms_[0].coeff != 1) r *= a.terms_[0].coeff;
    return r;
  }
  if (b.is_monomial()) return b * a;

  const int lo = a.min_exp2() + b.min_exp2();
  const int hi = a.max_exp2() + b.max_exp2();
  const std::size_t range = static_cast<std::size_t>(hi - lo) + 1;
  std::vector<LaurentPoly::Term> out;

  if (range <= 4 * a.size() * b.size() + 64) {
    if (all_integral(a.terms_) && all_integral(b.terms_)) {
      std::vector<mpz_class> acc(range);
      for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
          mpz_addmul(acc[x.exp2 + y.exp2 - lo].get_mpz_t(), x.coeff.get_num_mpz_t(),
                     y.coeff.get_num_mpz_t());
      for (std::size_t k = 0; k < range; ++k)
        if (acc[k] != 0) out.push_back({static_cast<int>(k) + lo, mpq_class(acc[k])});
    } else {
      std::vector<mpq_class> acc(range);
      for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[x.exp2 + y.exp2 - lo] += x.coeff * y.coeff;
      for (std::size_t k = 0; k < range; ++k)
        if (acc[k] != 0) out.push_back({static_cast<int>(k) + lo, std::move(acc[k])});
    }
  } else {
    std::map<int, mpq_class> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) acc[x.exp2 + y.exp2] += x.coeff * y.coeff;
    for (auto& [e, c] : acc)
      if (c != 0) out.push_back({e, std::move(c)});
  }
  return LaurentPoly(std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp2 != b.terms_[i].exp2 || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string exp2_to_string(int exp2) {
  if (exp2 % 2 == 0) return std::to_string(exp2 / 2);
  return std::to_string(exp2) + "/2";
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpq_class c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (it->exp2 == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (it->exp2 != 2) {
      const std::string e = exp2_to_string(it->exp2);
      if (it->exp2 > 0 && it->exp2 % 2 == 0)
        os << "^" << e;
      else
        os << "^(" << e << ")";
    }
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("LaurentPoly division by zero");
  if (num.is_zero()) return {LaurentPoly{}, LaurentPoly{}};

  // Work with ordinary polynomials in x = q^{1/2} after clearing the lowest powers.
  const int num_lo = num.min_exp2();
  const int den_lo = den.min_exp2();
  const int deg_a = num.max_exp2() - num_lo;
  const int deg_b = den.max_exp2() - den_lo;
  if (deg_a < deg_b) return {LaurentPoly{}, num};

  std::vector<mpq_class> rem(static_cast<std::size_t>(deg_a) + 1);
  for (const auto& t : num.terms_) rem[t.exp2 - num_lo] = t.coeff;
  const mpq_class& lead = den.terms_.back().coeff;

  std::vector<LaurentPoly::Term> quot;
  for (int k = deg_a - deg_b; k >= 0; --k) {
    mpq_class& top = rem[k + deg_b];
    if (top == 0) continue;
    mpq_class c = top / lead;
    for (const auto& t : den.terms_) rem[k + t.exp2 - den_lo] -= c * t.coeff;
    quot.push_back({k + num_lo - den_lo, std::move(c)});
  }
  std::reverse(quot.begin(), quot.end());

  std::vector<LaurentPoly::Term> r;
  for (int k = 0; k <= deg_a; ++k)
    if (rem[k] != 0) r.push_back({k + num_lo, std::move(rem[k])});
  return {LaurentPoly(std::move(quot)), LaurentPoly(std::move(r))};
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw InexactDivision("inexact Laurent division: (" + num.to_string() + ") / (" +
                          den.to_string() + ")");
  return q;
}

LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) throw DomainError("negative power of LaurentPoly");
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace logjones::qcalc
