#pragma once

#include <stdexcept>
#include <vector>

#include "normgeo/lp.hpp"
#include "normgeo/polyspace.hpp"

namespace normgeo {

namespace detail {

inline void require_unit(const PolySpace& space, const Functional& f) {
  if (f.size() != space.dim) throw std::invalid_argument("functional dimension mismatch");
  if (dual_norm(space, f) != 1) throw std::invalid_argument("functional is not a unit functional");
}

inline void require_eps(const Rational& eps) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
}

}  // namespace detail

/// Distance from y to the closed slice {z in B : f(z) >= 1-eps} in the
/// space's norm. The closed minimum equals the infimum over the open slice:
/// the open slice is nonempty and every closure point is a segment limit of
/// slice points.
///
/// Slice points are written as convex combinations z = sum w_j v_j of the
/// ball vertices, which keeps every LP variable nonnegative:
/// minimize t with sum w = 1, f(z) >= 1-eps, and g(y-z) <= t per facet g.
inline Rational dist_to_slice(const PolySpace& space, const Vector& y, const Functional& f,
                              const Rational& eps) {
  detail::require_unit(space, f);
  detail::require_eps(eps);
  if (y.size() != space.dim) throw std::invalid_argument("point dimension mismatch");

  const std::size_t m = space.vertices.size();
  LinearProgram lp(m + 1);  // vars: weights w, t
  for (std::size_t j = 0; j <= m; ++j) lp.lower[j] = Rational(0);
  lp.objective[m] = 1;
  Functional simplex(m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) simplex[j] = 1;
  lp.add(simplex, Relation::eq, 1);
  Functional depth(m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) depth[j] = dot(f, space.vertices[j]);
  lp.add(depth, Relation::ge, 1 - eps);
  for (const auto& g : space.facets) {
    Functional gap(m + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j) gap[j] = -dot(g, space.vertices[j]);
    gap[m] = -1;
    lp.add(gap, Relation::le, -dot(g, y));  // g(y - z) <= t
  }
  auto res = solve(lp);
  if (res.status != LpStatus::optimal) throw std::logic_error("slice LP must be solvable");
  return res.value;
}

/// Distance from y to the facet F_f = {z in B : f(z) = 1}, the maximal
/// convex subset of the sphere supported by f. The face is exactly the
/// convex hull of the facet's incident vertices.
inline Rational dist_to_hull(const PolySpace& space, const Vector& y,
                             const std::vector<Vector>& points);

inline Rational dist_to_face(const PolySpace& space, const Vector& y, const Functional& f) {
  if (f.size() != space.dim) throw std::invalid_argument("functional dimension mismatch");
  int fi = space.facet_index(f);
  if (fi < 0) throw std::invalid_argument("functional is not a facet of the space");
  if (y.size() != space.dim) throw std::invalid_argument("point dimension mismatch");

  std::vector<Vector> corners;
  for (int j : space.incidence[static_cast<std::size_t>(fi)])
    corners.push_back(space.vertices[j]);
  return dist_to_hull(space, y, corners);
}

/// Distance from y to aco(S) = conv(S u -S) for the closed slice
/// S = {z in B : f(z) >= 1-eps}. Points of conv(S u -S) are exactly
/// lambda*u - (1-lambda)*v with u, v in S (both sets are convex). The scaled
/// copies p = lambda*u and q = (1-lambda)*v are written as nonnegative
/// vertex combinations p = sum a_j v_j (total weight lambda) and
/// q = sum b_j v_j (total weight 1-lambda).
inline Rational dist_to_aco_slice(const PolySpace& space, const Vector& y, const Functional& f,
                                  const Rational& eps) {
  detail::require_unit(space, f);
  detail::require_eps(eps);
  if (y.size() != space.dim) throw std::invalid_argument("point dimension mismatch");

  const std::size_t m = space.vertices.size();
  // vars: a (m), b (m), t — all nonnegative
  const std::size_t T = 2 * m;
  LinearProgram lp(2 * m + 1);
  for (std::size_t j = 0; j <= T; ++j) lp.lower[j] = Rational(0);
  lp.objective[T] = 1;
  Functional simplex(2 * m + 1, Rational(0));
  for (std::size_t j = 0; j < 2 * m; ++j) simplex[j] = 1;
  lp.add(simplex, Relation::eq, 1);  // lambda + (1 - lambda) = 1
  Functional da(2 * m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) da[j] = dot(f, space.vertices[j]) - (1 - eps);
  lp.add(da, Relation::ge, 0);  // f(p) >= (1-eps) lambda
  Functional db(2 * m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) db[m + j] = dot(f, space.vertices[j]) - (1 - eps);
  lp.add(db, Relation::ge, 0);  // f(q) >= (1-eps)(1 - lambda)
  for (const auto& g : space.facets) {
    Functional gap(2 * m + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      Rational gv = dot(g, space.vertices[j]);
      gap[j] = -gv;
      gap[m + j] = gv;
    }
    gap[T] = -1;
    lp.add(gap, Relation::le, -dot(g, y));  // g(y - (p - q)) <= t
  }
  auto res = solve(lp);
  if (res.status != LpStatus::optimal) throw std::logic_error("aco LP must be solvable");
  return res.value;
}

/// Distance from y to conv(points) in the space's norm.
inline Rational dist_to_hull(const PolySpace& space, const Vector& y,
                             const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("empty hull");
  const std::size_t n = space.dim, m = points.size();
  // vars: weights w (m, >= 0), t
  LinearProgram lp(m + 1);
  for (std::size_t j = 0; j < m; ++j) lp.lower[j] = Rational(0);
  lp.lower[m] = Rational(0);
  lp.objective[m] = 1;
  Functional simplex(m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) simplex[j] = 1;
  lp.add(simplex, Relation::eq, 1);
  for (const auto& g : space.facets) {
    Functional gap(m + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j) gap[j] = -dot(g, points[j]);
    gap[m] = -1;
    lp.add(gap, Relation::le, -dot(g, y));  // g(y - sum w_j p_j) <= t
  }
  auto res = solve(lp);
  if (res.status != LpStatus::optimal) throw std::logic_error("hull LP must be solvable");
  return res.value;
}

/// Minkowski gauge of x with respect to conv(vertices), by LP:
/// min sum(w) subject to sum(w_j v_j) = x, w >= 0. Cross-checks the H-rep norm.
inline Rational gauge_from_vrep(const PolySpace& space, const Vector& x) {
  if (x.size() != space.dim) throw std::invalid_argument("point dimension mismatch");
  const std::size_t m = space.vertices.size();
  LinearProgram lp(m);
  for (std::size_t j = 0; j < m; ++j) {
    lp.lower[j] = Rational(0);
    lp.objective[j] = 1;
  }
  for (std::size_t i = 0; i < space.dim; ++i) {
    Functional row(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) row[j] = space.vertices[j][i];
    lp.add(row, Relation::eq, x[i]);
  }
  auto res = solve(lp);
  if (res.status != LpStatus::optimal) throw std::logic_error("gauge LP must be solvable");
  return res.value;
}

}  // namespace normgeo
