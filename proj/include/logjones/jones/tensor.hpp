#pragma once

#include <cstddef>
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "logjones/error.hpp"
#include "logjones/jones/matrix.hpp"

namespace logjones::jones {

/// Sparse vector over a mixed-radix tensor basis, sorted by index.
template <class T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Linear operator on V_1 (x) ... (x) V_n stored by sparse columns.
///
/// Basis index of (i_1, ..., i_n) is mixed-radix with i_1 most significant.
template <class T>
struct TensorOperator {
  std::vector<int> factor_dims;
  std::vector<SparseVector<T>> columns;

  std::size_t dim() const { return columns.size(); }

  static TensorOperator identity(std::vector<int> dims) {
    TensorOperator op{std::move(dims), {}};
    std::size_t total = 1;
    for (int d : op.factor_dims) total *= static_cast<std::size_t>(d);
    op.columns.resize(total);
    for (std::size_t j = 0; j < total; ++j) op.columns[j].push_back({j, T(1)});
    return op;
  }

  /// Entry (row, col); zero when absent.
  T entry(std::size_t row, std::size_t col) const {
    for (const auto& [r, v] : columns[col])
      if (r == row) return v;
    return T(0);
  }

  Matrix<T> to_dense() const {
    Matrix<T> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [r, v] : columns[j]) m(r, j) = v;
    return m;
  }

  static TensorOperator from_dense(std::vector<int> dims, const Matrix<T>& m) {
    TensorOperator op{std::move(dims), std::vector<SparseVector<T>>(m.cols())};
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_zero_scalar(m(i, j))) op.columns[j].push_back({i, m(i, j)});
    return op;
  }
};

/// Strides for the mixed-radix index, most significant factor first.
inline std::vector<std::size_t> tensor_strides(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    s[k] = acc;
    acc *= static_cast<std::size_t>(dims[k]);
  }
  return s;
}

/// Apply a two-factor operator `gate` on V_a (x) V_b to factors (pos, pos+1) of a
/// vector on a larger tensor product. The gate must map into the same pair of
/// dimensions (dims[pos], dims[pos+1]).
template <class T>
SparseVector<T> apply_gate(const TensorOperator<T>& gate, const std::vector<int>& dims,
                           std::size_t pos, const SparseVector<T>& v) {
  if (pos + 1 >= dims.size() || gate.factor_dims.size() != 2 ||
      gate.factor_dims[0] != dims[pos] || gate.factor_dims[1] != dims[pos + 1])
    throw DomainError("apply_gate: gate does not fit the tensor factors");
  const auto strides = tensor_strides(dims);
  const std::size_t sa = strides[pos], sb = strides[pos + 1];
  const std::size_t db = static_cast<std::size_t>(dims[pos + 1]);
  const std::size_t da = static_cast<std::size_t>(dims[pos]);

  std::map<std::size_t, T> acc;
  for (const auto& [idx, coeff] : v) {
    const std::size_t a = (idx / sa) % da;
    const std::size_t b = (idx / sb) % db;
    const std::size_t base = idx - a * sa - b * sb;
    for (const auto& [out, g] : gate.columns[a * db + b]) {
      const std::size_t k = out / db, l = out % db;
      auto [it, fresh] = acc.try_emplace(base + k * sa + l * sb, T(0));
      it->second += g * coeff;
    }
  }
  SparseVector<T> result;
  result.reserve(acc.size());
  for (auto& [idx, c] : acc)
    if (!is_zero_scalar(c)) result.emplace_back(idx, std::move(c));
  return result;
}

/// Apply a full operator to a sparse vector.
template <class T>
SparseVector<T> apply(const TensorOperator<T>& op, const SparseVector<T>& v) {
  std::map<std::size_t, T> acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, x] : op.columns[j]) {
      auto [it, fresh] = acc.try_emplace(i, T(0));
      it->second += x * c;
    }
  SparseVector<T> result;
  for (auto& [idx, c] : acc)
    if (!is_zero_scalar(c)) result.emplace_back(idx, std::move(c));
  return result;
}

/// a * b (apply b first).
template <class T>
TensorOperator<T> compose(const TensorOperator<T>& a, const TensorOperator<T>& b) {
  if (a.factor_dims != b.factor_dims) throw DomainError("compose: factor mismatch");
  TensorOperator<T> c{a.factor_dims, std::vector<SparseVector<T>>(b.dim())};
  for (std::size_t j = 0; j < b.dim(); ++j) c.columns[j] = apply(a, b.columns[j]);
  return c;
}

template <class T>
bool operator==(const TensorOperator<T>& a, const TensorOperator<T>& b) {
  if (a.factor_dims != b.factor_dims || a.columns.size() != b.columns.size()) return false;
  for (std::size_t j = 0; j < a.columns.size(); ++j) {
    if (a.columns[j].size() != b.columns[j].size()) return false;
    for (std::size_t k = 0; k < a.columns[j].size(); ++k)
      if (a.columns[j][k].first != b.columns[j][k].first ||
          !(a.columns[j][k].second == b.columns[j][k].second))
        return false;
  }
  return true;
}

/// Kronecker product of per-factor dense matrices, as a tensor operator.
template <class T>
TensorOperator<T> kron(const std::vector<const Matrix<T>*>& factors) {
  std::vector<int> dims;
  for (const auto* f : factors) dims.push_back(static_cast<int>(f->rows()));
  TensorOperator<T> op = TensorOperator<T>::identity(dims);
  const auto strides = tensor_strides(dims);
  for (std::size_t j = 0; j < op.dim(); ++j) {
    SparseVector<T> col{{0, T(1)}};
    for (std::size_t p = 0; p < factors.size(); ++p) {
      const std::size_t jp = (j / strides[p]) % static_cast<std::size_t>(dims[p]);
      SparseVector<T> next;
      for (const auto& [idx, c] : col)
        for (std::size_t i = 0; i < factors[p]->rows(); ++i) {
          const T& x = (*factors[p])(i, jp);
          if (!is_zero_scalar(x)) next.emplace_back(idx + i * strides[p], c * x);
        }
      col = std::move(next);
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    op.columns[j] = std::move(col);
  }
  return op;
}

}  // namespace logjones::jones
