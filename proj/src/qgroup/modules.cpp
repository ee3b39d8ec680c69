#include "logjones/qgroup/modules.hpp"

#include <algorithm>

#include "logjones/error.hpp"
#include "logjones/qcalc/qsymbols.hpp"

namespace logjones::qgroup {

using qcalc::LaurentPoly;

namespace {

int normalize_exp(int w, int N) {
  w %= 2 * N;
  if (w <= -N) w += 2 * N;
  if (w > N) w -= 2 * N;
  return w;
}

ComplexHP qint_xi(int k, const RootContext& ctx) { return qcalc::eval(qcalc::qint(k), ctx); }

struct Builder {
  const RootContext& ctx;
  RestrictedModule M;

  Builder(const RootContext& c, ModuleKind kind, int sign, int index, std::vector<std::string> labels)
      : ctx(c) {
    M.kind = kind;
    M.sign = sign;
    M.index = index;
    M.N = c.N();
    M.dim = static_cast<int>(labels.size());
    M.basis_labels = std::move(labels);
    M.matE = M.matF = M.matK = HPMatrix(M.dim, M.dim);
    M.weight_exp.assign(M.dim, 0);
  }
  int at(const std::string& l) const { return M.position(l); }
  void K(const std::string& v, int w) {
    const int i = at(v);
    M.weight_exp[i] = normalize_exp(w, M.N);
    M.matK(i, i) = ctx.xi_power(w);
  }
  void E(const std::string& from, const std::string& to, const ComplexHP& c) { M.matE(at(to), at(from)) += c; }
  void F(const std::string& from, const std::string& to, const ComplexHP& c) { M.matF(at(to), at(from)) += c; }
};

std::string lab(const char* p, int i) { return std::string(p) + "_" + std::to_string(i); }

std::vector<std::string> labels_for(std::initializer_list<std::pair<const char*, int>> groups) {
  std::vector<std::string> out;
  for (const auto& [p, n] : groups)
    for (int i = 0; i < n; ++i) out.push_back(lab(p, i));
  return out;
}

RestrictedModule build_uv(ModuleKind kind, int sign, int s, const RootContext& ctx) {
  const int N = ctx.N();
  const int dim = kind == ModuleKind::U ? s : N;
  const char* p = kind == ModuleKind::U ? "u" : "v";
  Builder b(ctx, kind, sign, s, labels_for({{p, dim}}));
  const ComplexHP sg(sign);
  for (int n = 0; n < dim; ++n) {
    b.K(lab(p, n), s - 1 - 2 * n + (sign < 0 ? N : 0));
    if (n >= 1) b.E(lab(p, n), lab(p, n - 1), sg * qint_xi(n, ctx) * qint_xi(s - n, ctx));
    if (n + 1 < dim) b.F(lab(p, n), lab(p, n + 1), ComplexHP(1));
  }
  return std::move(b.M);
}

// P_s^+: x_j, y_j (j < N-s), a_n, b_n (n < s).
RestrictedModule build_p_plus(int s, const RootContext& ctx) {
  const int N = ctx.N(), t = N - s;
  Builder b(ctx, ModuleKind::P, 1, s, labels_for({{"x", t}, {"y", t}, {"a", s}, {"b", s}}));
  const ComplexHP one(1);
  for (int j = 0; j < t; ++j) {
    b.K(lab("x", j), 2 * N - s - 1 - 2 * j);
    b.K(lab("y", j), -s - 1 - 2 * j);
    const ComplexHP c = -qint_xi(j, ctx) * qint_xi(t - j, ctx);
    if (j >= 1) {
      b.E(lab("x", j), lab("x", j - 1), c);
      b.E(lab("y", j), lab("y", j - 1), c);
    } else {
      b.E(lab("y", 0), lab("a", s - 1), one);
    }
    b.F(lab("x", j), j + 1 < t ? lab("x", j + 1) : lab("a", 0), one);
    if (j + 1 < t) b.F(lab("y", j), lab("y", j + 1), one);
  }
  for (int n = 0; n < s; ++n) {
    b.K(lab("a", n), s - 1 - 2 * n);
    b.K(lab("b", n), s - 1 - 2 * n);
    const ComplexHP c = qint_xi(n, ctx) * qint_xi(s - n, ctx);
    if (n >= 1) {
      b.E(lab("a", n), lab("a", n - 1), c);
      b.E(lab("b", n), lab("b", n - 1), c);
      b.E(lab("b", n), lab("a", n - 1), one);
    } else {
      b.E(lab("b", 0), lab("x", t - 1), one);
    }
    if (n + 1 < s) b.F(lab("a", n), lab("a", n + 1), one);
    b.F(lab("b", n), n + 1 < s ? lab("b", n + 1) : lab("y", 0), one);
  }
  return std::move(b.M);
}

// P_{N-s}^-: x_j, y_j (j < N-s), a_n, b_n (n < s).
RestrictedModule build_p_minus(int label, const RootContext& ctx) {
  const int N = ctx.N(), s = N - label, t = label;
  Builder b(ctx, ModuleKind::P, -1, label, labels_for({{"x", t}, {"y", t}, {"a", s}, {"b", s}}));
  const ComplexHP one(1);
  for (int j = 0; j < t; ++j) {
    b.K(lab("x", j), -s - 1 - 2 * j);
    b.K(lab("y", j), -s - 1 - 2 * j);
    const ComplexHP c = -qint_xi(j, ctx) * qint_xi(t - j, ctx);
    if (j >= 1) {
      b.E(lab("x", j), lab("x", j - 1), c);
      b.E(lab("y", j), lab("y", j - 1), c);
      b.E(lab("y", j), lab("x", j - 1), one);
    } else {
      b.E(lab("y", 0), lab("a", s - 1), one);
    }
    if (j + 1 < t) b.F(lab("x", j), lab("x", j + 1), one);
    b.F(lab("y", j), j + 1 < t ? lab("y", j + 1) : lab("b", 0), one);
  }
  for (int n = 0; n < s; ++n) {
    b.K(lab("a", n), s - 1 - 2 * n);
    b.K(lab("b", n), -2 * N + s - 1 - 2 * n);
    const ComplexHP c = qint_xi(n, ctx) * qint_xi(s - n, ctx);
    if (n >= 1) {
      b.E(lab("a", n), lab("a", n - 1), c);
      b.E(lab("b", n), lab("b", n - 1), c);
    } else {
      b.E(lab("b", 0), lab("x", t - 1), one);
    }
    b.F(lab("a", n), n + 1 < s ? lab("a", n + 1) : lab("x", 0), one);
    if (n + 1 < s) b.F(lab("b", n), lab("b", n + 1), one);
  }
  return std::move(b.M);
}

std::vector<std::string> y_labels(int m, int sign, int N) {
  const int na = sign > 0 ? 2 * N - m : 2 * N + m, nb = sign > 0 ? m : 2 * N - m;
  return labels_for({{"alpha", na}, {"beta", nb}});
}

}  // namespace

std::string RestrictedModule::name() const {
  static const char* names[] = {"U", "V", "P", "Y"};
  return std::string(names[static_cast<int>(kind)]) + "_" + std::to_string(index) + (sign > 0 ? "^+" : "^-");
}

int RestrictedModule::position(const std::string& label) const {
  const auto it = std::find(basis_labels.begin(), basis_labels.end(), label);
  if (it == basis_labels.end()) throw DomainError("no basis vector " + label + " in " + name());
  return static_cast<int>(it - basis_labels.begin());
}

jones::WeightRep build_Y(int m, int sign, int N) {
  if (N < 2 || m < 1 || m > N - 1) throw DomainError("Y_m requires 1 <= m <= N-1");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const int na = sign > 0 ? 2 * N - m : 2 * N + m, nb = sign > 0 ? m : 2 * N - m;
  const int dim = na + nb;
  jones::PolyMatrix E(dim, dim), F(dim, dim);
  std::vector<int> w(dim);
  auto A = [](int i) { return i; };
  auto B = [na](int i) { return na + i; };
  for (int i = 0; i < na; ++i) {
    w[A(i)] = (sign > 0 ? 2 * N - m - 1 : 2 * N + m - 1) - 2 * i;
    if (i >= 1) E(A(i - 1), A(i)) = qcalc::qint(i);
    if (sign > 0 && i >= N - m + 1 && i <= N) E(B(m - N + i - 1), A(i)) = qcalc::qbinom(2 * N - m - i - 1, N - i);
    if (sign < 0 && i >= m + 1 && i <= 2 * N) E(B(i - m - 1), A(i)) = qcalc::qbinom(2 * N + m - 1 - i, 2 * N - i);
    if (i + 1 < na) F(A(i + 1), A(i)) = qcalc::qint(na - 1 - i);
    if (sign > 0 && i == N - m - 1) F(B(0), A(i)) = qcalc::qbinom(N - 1, m - 1);
    if (sign < 0 && i == m - 1) F(B(0), A(i)) = qcalc::qbinom(2 * N - 1, 2 * N - m - 1);
  }
  for (int i = 0; i < nb; ++i) {
    w[B(i)] = nb - 1 - 2 * i;
    if (i >= 1) E(B(i - 1), B(i)) = qcalc::qint(i);
    if (i + 1 < nb) F(B(i + 1), B(i)) = qcalc::qint(nb - 1 - i);
  }
  return jones::WeightRep::from_actions(std::move(E), std::move(F), std::move(w));
}

RestrictedModule specialize(const jones::WeightRep& V, ModuleKind kind, int sign, int index,
                            std::vector<std::string> labels, const RootContext& ctx) {
  if (static_cast<int>(labels.size()) != V.dim) throw DomainError("specialize: label count does not match");
  Builder b(ctx, kind, sign, index, std::move(labels));
  for (int i = 0; i < V.dim; ++i) {
    b.M.weight_exp[i] = normalize_exp(V.weights[i], ctx.N());
    b.M.matK(i, i) = ctx.xi_power(V.weights[i]);
    for (int j = 0; j < V.dim; ++j) {
      if (!V.matE(i, j).is_zero()) b.M.matE(i, j) = qcalc::eval(V.matE(i, j), ctx);
      if (!V.matF(i, j).is_zero()) b.M.matF(i, j) = qcalc::eval(V.matF(i, j), ctx);
    }
  }
  return std::move(b.M);
}

RestrictedModule build_restricted(ModuleKind kind, int sign, int index, const RootContext& ctx) {
  const int N = ctx.N();
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  switch (kind) {
    case ModuleKind::U:
    case ModuleKind::V:
      if (index < 1 || index > N) throw DomainError("U_s, V_s require 1 <= s <= N");
      return build_uv(kind, sign, index, ctx);
    case ModuleKind::P:
      if (index < 1 || index > N - 1) throw DomainError("P_s requires 1 <= s <= N-1");
      return sign > 0 ? build_p_plus(index, ctx) : build_p_minus(index, ctx);
    case ModuleKind::Y:
      if (index < 1 || index > N - 1) throw DomainError("Y_m requires 1 <= m <= N-1");
      return specialize(build_Y(index, sign, N), kind, sign, index, y_labels(index, sign, N), ctx);
  }
  throw DomainError("unknown module kind");
}

Real norm(const HPMatrix& m) {
  Real s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).abs2();
  return boost::multiprecision::sqrt(s);
}

std::vector<Real> relation_residuals(const RestrictedModule& M, const RootContext& ctx) {
  const int N = ctx.N();
  const HPMatrix I = HPMatrix::identity(M.dim);
  HPMatrix Kinv(M.dim, M.dim);
  for (int i = 0; i < M.dim; ++i) Kinv(i, i) = ComplexHP(1) / M.matK(i, i);
  const ComplexHP b1 = ctx.xi() - ctx.xi_power(-1);
  return {
      norm(jones::matrix_power(M.matE, N)),
      norm(jones::matrix_power(M.matF, N)),
      norm(jones::matrix_power(M.matK, 2 * N) - I),
      norm(M.matK * M.matE * Kinv - ctx.xi_power(2) * M.matE),
      norm(M.matK * M.matF * Kinv - ctx.xi_power(-2) * M.matF),
      norm(b1 * (M.matE * M.matF - M.matF * M.matE) - (M.matK - Kinv)),
  };
}

bool satisfies_relations(const RestrictedModule& M, const RootContext& ctx) {
  Real scale = 1 + norm(M.matE) * norm(M.matF);
  for (const Real& r : relation_residuals(M, ctx))
    if (!ctx.is_zero(ComplexHP(r), scale)) return false;
  return true;
}

}  // namespace logjones::qgroup
