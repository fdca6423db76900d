#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "normgeo/linalg.hpp"
#include "normgeo/rational.hpp"

namespace normgeo {

enum class Relation { le, eq, ge };

struct Constraint {
  Functional row;
  Relation rel = Relation::le;
  Rational rhs;
};

/// Exact rational linear program. Variables are free unless bounds are given.
struct LinearProgram {
  std::size_t num_vars = 0;
  bool maximize = false;
  Functional objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower;  // empty or per-variable
  std::vector<std::optional<Rational>> upper;

  LinearProgram() = default;
  explicit LinearProgram(std::size_t n, bool max = false)
      : num_vars(n), maximize(max), objective(n, Rational(0)), lower(n), upper(n) {}

  void add(Functional row, Relation rel, Rational rhs) {
    constraints.push_back({std::move(row), rel, std::move(rhs)});
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  Vector point;  // original variable values when optimal
};

namespace lpdetail {

/// Dense exact tableau with Bland's anti-cycling rule. Column order is the
/// canonical construction order, so runs are deterministic.
struct Tableau {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;               // rhs, kept >= 0
  std::vector<Rational> cost;            // reduced cost row
  Rational obj = 0;                      // negated objective value of current basis
  std::vector<std::size_t> basis;        // per row, basic column

  void pivot(std::size_t r, std::size_t c) {
    Rational p = a[r][c];
    for (auto& v : a[r]) v /= p;
    b[r] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (cost[c] != 0) {
      Rational f = cost[c];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * a[r][j];
      obj -= f * b[r];
    }
    basis[r] = c;
  }

  /// Runs simplex on the current cost row. Columns with banned[j] set may
  /// never enter the basis. Returns false on unboundedness. Entering rule:
  /// most negative reduced cost (ties to the lowest index) for speed, then
  /// Bland's rule after a fixed pivot budget to guarantee termination. Both
  /// rules are deterministic.
  bool optimize(const std::vector<bool>& banned) {
    const std::size_t bland_after = 100 + 10 * (rows + cols);
    std::size_t pivots = 0;
    while (true) {
      std::size_t enter = cols;
      if (pivots < bland_after) {
        const Rational* best = nullptr;
        for (std::size_t j = 0; j < cols; ++j) {
          if (banned[j] || !(cost[j] < 0)) continue;
          if (!best || cost[j] < *best) {
            best = &cost[j];
            enter = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < cols; ++j) {
          if (banned[j]) continue;
          if (cost[j] < 0) { enter = j; break; }  // Bland: lowest index
        }
      }
      if (enter == cols) return true;
      ++pivots;
      std::size_t leave = rows;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace lpdetail

/// Exact two-phase simplex. Deterministic given the canonical row/column
/// order (Bland's rule both for entering and for ratio ties).
inline LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  // Variable substitutions to nonnegative standard-form variables.
  // col_of[j] -> first standard column of original var j; kinds:
  //   shifted_lower: x = lo + y        (one column)
  //   flipped_upper: x = up - y        (one column)
  //   split_free:    x = y+ - y-       (two columns)
  enum class Kind { shifted_lower, flipped_upper, split_free };
  std::vector<Kind> kind(n);
  std::vector<std::size_t> col_of(n);
  std::size_t ncols = 0;
  auto lo = [&](std::size_t j) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return lp.lower.empty() ? none : lp.lower[j];
  };
  auto up = [&](std::size_t j) -> const std::optional<Rational>& {
    static const std::optional<Rational> none;
    return lp.upper.empty() ? none : lp.upper[j];
  };
  for (std::size_t j = 0; j < n; ++j) {
    col_of[j] = ncols;
    if (lo(j)) {
      kind[j] = Kind::shifted_lower;
      ncols += 1;
    } else if (up(j)) {
      kind[j] = Kind::flipped_upper;
      ncols += 1;
    } else {
      kind[j] = Kind::split_free;
      ncols += 2;
    }
  }

  // Rows: user constraints, plus "x <= up" rows for doubly-bounded vars.
  struct Row {
    std::vector<Rational> coef;  // over standard columns
    Relation rel;
    Rational rhs;
  };
  std::vector<Row> rows;
  auto expand = [&](const Functional& orig, const Rational& rhs0, Relation rel) {
    Row r{std::vector<Rational>(ncols, Rational(0)), rel, rhs0};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = orig[j];
      if (c == 0) continue;
      switch (kind[j]) {
        case Kind::shifted_lower:
          r.coef[col_of[j]] += c;
          r.rhs -= c * *lo(j);
          break;
        case Kind::flipped_upper:
          r.coef[col_of[j]] -= c;
          r.rhs -= c * *up(j);
          break;
        case Kind::split_free:
          r.coef[col_of[j]] += c;
          r.coef[col_of[j] + 1] -= c;
          break;
      }
    }
    rows.push_back(std::move(r));
  };
  for (const auto& c : lp.constraints) expand(c.row, c.rhs, c.rel);
  for (std::size_t j = 0; j < n; ++j) {
    if (kind[j] == Kind::shifted_lower && up(j)) {
      Functional e(n, Rational(0));
      e[j] = 1;
      expand(e, *up(j), Relation::le);
    }
  }

  // Objective in standard columns (minimization).
  std::vector<Rational> c_std(ncols, Rational(0));
  Rational c_shift = 0;
  {
    Functional obj = lp.objective;
    if (lp.maximize)
      for (auto& v : obj) v = -v;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = obj[j];
      if (c == 0) continue;
      switch (kind[j]) {
        case Kind::shifted_lower:
          c_std[col_of[j]] += c;
          c_shift += c * *lo(j);
          break;
        case Kind::flipped_upper:
          c_std[col_of[j]] -= c;
          c_shift += c * *up(j);
          break;
        case Kind::split_free:
          c_std[col_of[j]] += c;
          c_std[col_of[j] + 1] -= c;
          break;
      }
    }
  }

  // Assemble tableau: structural cols, slack/surplus cols, artificial cols.
  // A row whose slack enters with coefficient +1 (after sign normalization)
  // uses that slack as its initial basic variable; only the remaining rows
  // get an artificial.
  const std::size_t m = rows.size();
  std::size_t nslack = 0;
  for (const auto& r : rows)
    if (r.rel != Relation::eq) ++nslack;
  std::size_t nart = 0;
  for (const auto& r : rows) {
    bool flip = r.rhs < 0;
    bool slack_basis = r.rel != Relation::eq && ((r.rel == Relation::le) != flip);
    if (!slack_basis) ++nart;
  }
  lpdetail::Tableau t;
  t.rows = m;
  t.cols = ncols + nslack + nart;
  t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, 0);
  std::vector<bool> needs_art(m, false);
  std::size_t slack_at = ncols, art_at = ncols + nslack;
  for (std::size_t i = 0; i < m; ++i) {
    Row& r = rows[i];
    bool flip = r.rhs < 0;
    for (std::size_t j = 0; j < ncols; ++j) t.a[i][j] = flip ? -r.coef[j] : r.coef[j];
    t.b[i] = flip ? -r.rhs : r.rhs;
    bool slack_basis = false;
    if (r.rel != Relation::eq) {
      Rational s = (r.rel == Relation::le) ? Rational(1) : Rational(-1);
      if (flip) s = -s;
      t.a[i][slack_at] = s;
      slack_basis = s == 1;
      if (slack_basis) t.basis[i] = slack_at;
      ++slack_at;
    }
    if (!slack_basis) {
      needs_art[i] = true;
      t.a[i][art_at] = 1;
      t.basis[i] = art_at;
      ++art_at;
    }
  }

  std::vector<bool> artificial(t.cols, false);
  for (std::size_t j = ncols + nslack; j < t.cols; ++j) artificial[j] = true;

  if (nart > 0) {
    // Phase 1: minimize the artificial sum.
    t.cost.assign(t.cols, Rational(0));
    t.obj = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!needs_art[i]) continue;
      for (std::size_t j = 0; j < ncols + nslack; ++j) t.cost[j] -= t.a[i][j];
      t.obj -= t.b[i];
    }
    t.optimize(artificial);  // bounded below by 0, cannot be unbounded
    if (t.obj != 0) {        // t.obj holds -(phase-1 objective)
      LpResult res;
      res.status = LpStatus::infeasible;
      return res;
    }
    // Drive residual zero-level artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (!artificial[t.basis[i]]) continue;
      for (std::size_t j = 0; j < ncols + nslack; ++j) {
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2.
  t.cost.assign(t.cols, Rational(0));
  for (std::size_t j = 0; j < ncols; ++j) t.cost[j] = c_std[j];
  t.obj = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bc = t.basis[i];
    if (bc < ncols && t.cost[bc] != 0) {
      Rational f = t.cost[bc];
      for (std::size_t j = 0; j < t.cols; ++j) t.cost[j] -= f * t.a[i][j];
      t.obj -= f * t.b[i];
    }
  }
  if (!t.optimize(artificial)) {
    LpResult res;
    res.status = LpStatus::unbounded;
    return res;
  }

  // Reconstruct original variables.
  std::vector<Rational> y(ncols, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < ncols) y[t.basis[i]] = t.b[i];
  LpResult res;
  res.status = LpStatus::optimal;
  res.point.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    switch (kind[j]) {
      case Kind::shifted_lower: res.point[j] = *lo(j) + y[col_of[j]]; break;
      case Kind::flipped_upper: res.point[j] = *up(j) - y[col_of[j]]; break;
      case Kind::split_free: res.point[j] = y[col_of[j]] - y[col_of[j] + 1]; break;
    }
  }
  res.value = dot(lp.objective, res.point);
  return res;
}

}  // namespace normgeo
