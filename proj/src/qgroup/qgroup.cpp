#include "logjones/qgroup/qgroup.hpp"

#include <algorithm>
#include <sstream>

#include "logjones/error.hpp"
#include "logjones/jones/jones.hpp"
#include "logjones/jones/rmatrix.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::qgroup {

using qcalc::LaurentPoly;

namespace {

ComplexHP qint_xi(int k, const RootContext& ctx) { return qcalc::eval(qcalc::qint(k), ctx); }
ComplexHP qfact_xi(int k, const RootContext& ctx) { return qcalc::eval(qcalc::qfact(k), ctx); }
ComplexHP sgn(int k) { return ComplexHP(k % 2 == 0 ? 1 : -1); }
std::string lab(const char* p, int i) { return std::string(p) + "_" + std::to_string(i); }

void check_m(int m, const RootContext& ctx) {
  if (m < 1 || m > ctx.N() - 1) throw DomainError("m must satisfy 1 <= m <= N-1");
}

struct MapBuilder {
  Intertwiner f;
  MapBuilder(RestrictedModule s, RestrictedModule t) {
    f.mat = HPMatrix(t.dim, s.dim);
    f.source = std::move(s);
    f.target = std::move(t);
  }
  void set(const std::string& from, const std::string& to, const ComplexHP& c) {
    f.mat(f.target.position(to), f.source.position(from)) = c;
  }
};

// The quotient Y_m^-/Y1 written in the basis of the complement.
RestrictedModule y_quotient(const RestrictedModule& Y, int m) {
  const int N = Y.N;
  std::vector<int> keep;
  for (int i = N + m; i < 2 * N + m; ++i) keep.push_back(Y.position(lab("alpha", i)));
  for (int i = N - m; i < 2 * N - m; ++i) keep.push_back(Y.position(lab("beta", i)));
  RestrictedModule Q;
  Q.kind = Y.kind;
  Q.sign = Y.sign;
  Q.index = Y.index;
  Q.N = N;
  Q.dim = static_cast<int>(keep.size());
  Q.matE = Q.matF = Q.matK = HPMatrix(Q.dim, Q.dim);
  for (int a = 0; a < Q.dim; ++a) {
    Q.basis_labels.push_back(Y.basis_labels[keep[a]]);
    Q.weight_exp.push_back(Y.weight_exp[keep[a]]);
    for (int b = 0; b < Q.dim; ++b) {
      Q.matE(a, b) = Y.matE(keep[a], keep[b]);
      Q.matF(a, b) = Y.matF(keep[a], keep[b]);
      Q.matK(a, b) = Y.matK(keep[a], keep[b]);
    }
  }
  return Q;
}

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

Intertwiner iso_f(int m, const RootContext& ctx, MapVariant v) {
  check_m(m, ctx);
  const int N = ctx.N();
  MapBuilder b(build_restricted(ModuleKind::P, 1, m, ctx), build_restricted(ModuleKind::Y, 1, m, ctx));
  for (int k = 0; k <= N - m - 1; ++k) {
    b.set(lab("x", k), lab("alpha", k), sgn(N - m - 1 - k) * qint_xi(m, ctx) / qfact_xi(N - m - 1 - k, ctx));
    b.set(lab("y", k), lab("alpha", N + k), (v == MapVariant::Printed ? sgn(k) : ComplexHP(1)) * qfact_xi(N - 1, ctx) / qfact_xi(N - m - 1 - k, ctx));
  }
  for (int k = 0; k <= m - 1; ++k) {
    b.set(lab("a", k), lab("beta", k), qfact_xi(m, ctx) / qfact_xi(m - 1 - k, ctx));
    b.set(lab("b", k), lab("alpha", k + N - m), qfact_xi(k, ctx));
  }
  return std::move(b.f);
}

Intertwiner iso_g(int m, const RootContext& ctx) {
  check_m(m, ctx);
  const int N = ctx.N();
  MapBuilder b(build_restricted(ModuleKind::P, -1, N - m, ctx), build_restricted(ModuleKind::Y, -1, m, ctx));
  for (int k = 0; k <= N - m - 1; ++k) {
    b.set(lab("x", k), lab("beta", k), sgn(m + k) * qfact_xi(N - m, ctx) / qfact_xi(N - m - 1 - k, ctx));
    b.set(lab("y", k), lab("alpha", m + k), sgn(k) * qfact_xi(k, ctx));
  }
  for (int k = 0; k <= m - 1; ++k) {
    b.set(lab("a", k), lab("alpha", k), qint_xi(m, ctx) / qfact_xi(m - 1 - k, ctx));
    b.set(lab("b", k), lab("alpha", N + k), sgn(N + m + k) * qfact_xi(N - 1, ctx) / qfact_xi(m - 1 - k, ctx));
  }
  return std::move(b.f);
}

Intertwiner iso_h(int m, const RootContext& ctx, MapVariant v) {
  check_m(m, ctx);
  const int N = ctx.N();
  MapBuilder b(build_restricted(ModuleKind::P, -1, N - m, ctx),
               y_quotient(build_restricted(ModuleKind::Y, -1, m, ctx), m));
  for (int k = 0; k <= N - m - 1; ++k) {
    b.set(lab("x", k), lab("beta", N + k), qfact_xi(N - m, ctx) / qfact_xi(N - m - 1 - k, ctx));
    b.set(lab("y", k), lab("alpha", N + m + k), qfact_xi(k, ctx));
  }
  for (int k = 0; k <= m - 1; ++k) {
    b.set(lab("a", k), lab("beta", N - m + k), qfact_xi(k, ctx) / qfact_xi(m - 1, ctx));
    b.set(lab("b", k), lab("alpha", 2 * N + k), (v == MapVariant::Printed ? sgn(k) : ComplexHP(1)) * qfact_xi(N - 1, ctx) / qfact_xi(m - 1 - k, ctx));
  }
  return std::move(b.f);
}

Real intertwiner_residual(const Intertwiner& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  return std::max({norm(f.mat * s.matE - t.matE * f.mat), norm(f.mat * s.matF - t.matF * f.mat),
                   norm(f.mat * s.matK - t.matK * f.mat)});
}

Real verify_iso_f(int m, const RootContext& ctx, MapVariant v) { return intertwiner_residual(iso_f(m, ctx, v)); }
Real verify_iso_g(int m, const RootContext& ctx) { return intertwiner_residual(iso_g(m, ctx)); }
Real verify_iso_h(int m, const RootContext& ctx, MapVariant v) { return intertwiner_residual(iso_h(m, ctx, v)); }

Real y1_invariance_residual(int m, const RootContext& ctx) {
  check_m(m, ctx);
  const int N = ctx.N();
  const RestrictedModule Y = build_restricted(ModuleKind::Y, -1, m, ctx);
  std::vector<bool> in_y1(Y.dim, false);
  for (int i = 0; i < N + m; ++i) in_y1[Y.position(lab("alpha", i))] = true;
  for (int i = 0; i < N - m; ++i) in_y1[Y.position(lab("beta", i))] = true;
  Real s = 0;
  for (const HPMatrix* X : {&Y.matE, &Y.matF, &Y.matK})
    for (int r = 0; r < Y.dim; ++r)
      for (int c = 0; c < Y.dim; ++c)
        if (in_y1[c] && !in_y1[r]) s += (*X)(r, c).abs2();
  return boost::multiprecision::sqrt(s);
}

SpecializationReport rmatrix_specialization_check(const jones::WeightRep& V1, const jones::WeightRep& V2,
                                                  const RootContext& ctx) {
  const int N = ctx.N();
  const int bound = jones::nilpotency_bound(V1, V2);
  for (int n = 0; n < bound; ++n) {
    const jones::RTerm t = jones::rmatrix_term(V1, V2, n);
    const int den_order = qcalc::germ(t.denominator, ctx).order;
    for (std::size_t col = 0; col < t.numerator.columns.size(); ++col)
      for (const auto& [row, v] : t.numerator.columns[col]) {
        const qcalc::Germ g = qcalc::germ(v, ctx);
        if (g.is_zero()) continue;
        const bool ok = n >= N ? g.order > den_order : g.order >= den_order;
        if (!ok) {
          std::ostringstream os;
          os << "n=" << n << " entry (" << row << "," << col << "): zero order " << g.order
             << " against denominator order " << den_order;
          return {false, os.str()};
        }
      }
  }
  return {};
}

EtaResult eta_partial_trace(const jones::BraidWord& b, int m, int sign, const RootContext& ctx) {
  jones::validate(b);
  const int N = ctx.N();
  check_m(m, ctx);
  if (!b.closes_to_knot()) throw NotAKnot("closure of " + b.to_string() + " is not a knot");
  const int limit = b.strands <= 1 ? N : b.strands == 2 ? kEtaMaxNTwoStrand : b.strands == 3 ? kEtaMaxNThreeStrand : 0;
  if (N > limit)
    throw FeasibilityError("eta partial trace on " + std::to_string(b.strands) + " strands is limited to N <= " +
                           std::to_string(limit));
  const jones::WeightRep Y = build_Y(m, sign, N);
  const jones::FracOperator R = jones::rmatrix_fraction(Y, Y, false);
  const jones::FracOperator Rinv = jones::rmatrix_fraction(Y, Y, true);
  EtaResult r;
  r.m = m;
  r.sign = sign;
  r.writhe = b.writhe();
  const auto op = jones::braid_operator(b, jones::flip_output(R.numerator), jones::flip_input(Rinv.numerator));
  r.numerator = jones::partial_trace(op, jones::k_eigenvalues(Y));
  r.denominator = LaurentPoly(1);
  for (int g : b.word) r.denominator *= g > 0 ? R.denominator : Rinv.denominator;
  r.at_xi = HPMatrix(Y.dim, Y.dim);
  for (int i = 0; i < Y.dim; ++i)
    for (int j = 0; j < Y.dim; ++j)
      if (!r.numerator(i, j).is_zero()) r.at_xi(i, j) = qcalc::cyclotomic_limit(r.numerator(i, j), r.denominator, ctx);
  const int na = sign > 0 ? 2 * N - m : 2 * N + m;
  r.x0 = r.at_xi(na, sign > 0 ? N - m : m);
  return r;
}

ComplexHP x0_to_b(const ComplexHP& x0, int m, int sign, const RootContext& ctx) {
  const ComplexHP b = x0 / qint_xi(m, ctx);
  return sign < 0 && m % 2 != 0 ? -b : b;
}

std::vector<CheckResult> center_action_check(const RootContext& ctx) {
  const int N = ctx.N();
  std::vector<RestrictedModule> mods;
  mods.push_back(build_restricted(ModuleKind::U, 1, N, ctx));
  mods.push_back(build_restricted(ModuleKind::U, -1, N, ctx));
  for (int s = 1; s <= N - 1; ++s) {
    mods.push_back(build_restricted(ModuleKind::P, 1, s, ctx));
    mods.push_back(build_restricted(ModuleKind::P, -1, s, ctx));
  }

  std::vector<CheckResult> out;
  for (const auto& M : mods) {
    const HPMatrix I = HPMatrix::identity(M.dim), Z(M.dim, M.dim);
    // Block label of the module: e_s acts as 1 exactly when block == s.
    int block;
    if (M.kind == ModuleKind::U) block = M.sign > 0 ? N : 0;
    else block = M.sign > 0 ? M.index : N - M.index;

    std::vector<HPMatrix> e(N + 1, Z), wp(N, Z), wm(N, Z);
    e[block] = I;
    if (M.kind == ModuleKind::P && M.sign > 0)
      for (int n = 0; n < M.index; ++n) wp[block](M.position(lab("a", n)), M.position(lab("b", n))) = ComplexHP(1);
    if (M.kind == ModuleKind::P && M.sign < 0)
      for (int k = 0; k < M.index; ++k) wm[block](M.position(lab("x", k)), M.position(lab("y", k))) = ComplexHP(1);

    Real central = 0;
    auto commute = [&](const HPMatrix& z) {
      for (const HPMatrix* X : {&M.matE, &M.matF, &M.matK}) central = std::max(central, norm(z * *X - *X * z));
    };
    for (const auto& z : e) commute(z);
    for (int s = 1; s < N; ++s) commute(wp[s]), commute(wm[s]);

    Real idem = 0, mixed = 0, rad = 0;
    for (int s = 0; s <= N; ++s)
      for (int t = 0; t <= N; ++t) idem = std::max(idem, norm(e[s] * e[t] - (s == t ? e[s] : Z)));
    for (int s = 0; s <= N; ++s)
      for (int t = 1; t < N; ++t) {
        mixed = std::max(mixed, norm(e[s] * wp[t] - (s == t ? wp[t] : Z)));
        mixed = std::max(mixed, norm(e[s] * wm[t] - (s == t ? wm[t] : Z)));
      }
    for (int s = 1; s < N; ++s)
      for (int t = 1; t < N; ++t)
        rad = std::max({rad, norm(wp[s] * wp[t]), norm(wm[s] * wm[t]), norm(wp[s] * wm[t]), norm(wm[s] * wp[t])});

    const std::string p = M.name() + ",N=" + std::to_string(N);
    for (auto& [name, r] : std::vector<std::pair<std::string, Real>>{
             {"center_commutes", central}, {"e_e", idem}, {"e_w", mixed}, {"w_w", rad}})
      out.push_back({name, p, r, ctx.is_zero(ComplexHP(r))});
  }
  return out;
}

std::vector<CheckResult> structure_checks(const RootContext& ctx) {
  const int N = ctx.N();
  std::vector<CheckResult> out;
  auto relations = [&](const RestrictedModule& M) {
    Real worst = 0;
    for (const Real& r : relation_residuals(M, ctx)) worst = std::max(worst, r);
    out.push_back({"relations", M.name() + ",N=" + std::to_string(N), worst, satisfies_relations(M, ctx)});
  };
  for (int sign : {1, -1}) {
    for (int s = 1; s <= N; ++s) {
      relations(build_restricted(ModuleKind::U, sign, s, ctx));
      relations(build_restricted(ModuleKind::V, sign, s, ctx));
    }
    for (int s = 1; s < N; ++s) {
      relations(build_restricted(ModuleKind::P, sign, s, ctx));
      relations(build_restricted(ModuleKind::Y, sign, s, ctx));
    }
  }
  for (int s = 1; s < N; ++s) {
    // Weights of U_s^+ are xi^{s-1}, ..., xi^{1-s}; those of U_{N-s}^- are -xi^{N-s-1}, ..., -xi^{s+1-N}.
    const RestrictedModule up = build_restricted(ModuleKind::U, 1, s, ctx);
    const RestrictedModule um = build_restricted(ModuleKind::U, -1, N - s, ctx);
    Real r = 0;
    for (int n = 0; n < s; ++n) r += (up.matK(n, n) - ctx.xi_power(s - 1 - 2 * n)).abs();
    for (int n = 0; n < N - s; ++n) r += (um.matK(n, n) + ctx.xi_power(N - s - 1 - 2 * n)).abs();
    out.push_back({"weights", params({{"s", s}, {"N", N}}), r, ctx.is_zero(ComplexHP(r))});
  }
  for (int m = 1; m < N; ++m) {
    const std::string p = params({{"m", m}, {"N", N}});
    for (auto& [name, r] : std::vector<std::pair<std::string, Real>>{{"iso_f", verify_iso_f(m, ctx)},
                                                                      {"iso_g", verify_iso_g(m, ctx)},
                                                                      {"iso_h", verify_iso_h(m, ctx)},
                                                                      {"iso_f_sign_corrected", verify_iso_f(m, ctx, MapVariant::SignCorrected)},
                                                                      {"iso_h_sign_corrected", verify_iso_h(m, ctx, MapVariant::SignCorrected)},
                                                                      {"y1_invariant", y1_invariance_residual(m, ctx)}})
      out.push_back({name, p, r, ctx.is_zero(ComplexHP(r), Real(100))});
  }
  return out;
}

}  // namespace logjones::qgroup
