#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "normgeo/rational.hpp"

namespace normgeo {

/// Point of the space E. Length equals the owning space's dimension.
using Vector = std::vector<Rational>;

/// Element of the dual E*; pairing with a Vector is the dot product.
using Functional = std::vector<Rational>;

inline Rational dot(const Functional& f, const Vector& x) {
  if (f.size() != x.size()) throw std::invalid_argument("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

inline Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scale(const Rational& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vector negate(const Vector& a) { return scale(-1, a); }

inline bool is_zero(const Vector& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

/// Square matrix of rationals acting on the space; rows index the output.
struct OperatorMatrix {
  std::vector<std::vector<Rational>> entries;

  std::size_t dim() const { return entries.size(); }

  Vector apply(const Vector& x) const {
    if (x.size() != dim()) throw std::invalid_argument("operator/vector dimension mismatch");
    Vector y(dim());
    for (std::size_t i = 0; i < dim(); ++i) y[i] = dot(entries[i], x);
    return y;
  }

  OperatorMatrix compose(const OperatorMatrix& other) const {
    std::size_t n = dim();
    OperatorMatrix r{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          r.entries[i][j] += entries[i][k] * other.entries[k][j];
    return r;
  }

  bool operator==(const OperatorMatrix& other) const { return entries == other.entries; }

  static OperatorMatrix identity(std::size_t n) {
    OperatorMatrix m{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
    for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = 1;
    return m;
  }
};

/// Solves A x = b exactly by Gaussian elimination. Empty result when A is singular.
inline std::optional<Vector> solve_square(std::vector<std::vector<Rational>> a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline std::optional<OperatorMatrix> invert(const OperatorMatrix& m) {
  const std::size_t n = m.dim();
  OperatorMatrix inv{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0))};
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, Rational(0));
    e[j] = 1;
    auto col = solve_square(m.entries, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv.entries[i][j] = (*col)[i];
  }
  return inv;
}

/// Rank of a list of row vectors, exact elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t row = r + 1; row < m; ++row) {
      if (rows[row][col] == 0) continue;
      Rational factor = rows[row][col] / rows[r][col];
      for (std::size_t k = col; k < n; ++k) rows[row][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace normgeo
