#pragma once

#include <algorithm>
#include <vector>

#include "normgeo/errors.hpp"
#include "normgeo/linalg.hpp"

namespace normgeo {

namespace detail {

/// Lexicographic order on rational tuples; the canonical ordering used
/// everywhere so certificates are byte-reproducible.
inline bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<std::vector<Rational>>& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace detail

/// Facet enumeration of conv(points) for a symmetric full-dimensional point set
/// containing the origin in its interior, dimensions 1..3.
///
/// Every facet hyperplane misses the origin, so it can be written {x : f(x) = 1}
/// and its incident points are linearly independent iff affinely independent.
/// We enumerate n-subsets of points, solve f(p_i) = 1, and keep f whenever the
/// whole set lies in the halfspace f <= 1. Supporting hyperplanes touching fewer
/// than n independent points never arise from such subsets, so the result is
/// exactly the facet list.
inline std::vector<Functional> vrep_to_hrep(const std::vector<Vector>& points) {
  if (points.empty()) throw degeneracy_error("empty point set");
  const std::size_t n = points[0].size();
  if (n > 3)
    throw unsupported_dimension_error(
        "built-in hull conversion supports dimension <= 3; supply facets explicitly");
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("inconsistent point dimensions");
  if (rank(points) < n) throw degeneracy_error("point set is not full-dimensional");

  const std::size_t m = points.size();
  std::vector<Functional> facets;
  // enumerate n-subsets of {0..m-1}
  std::vector<std::size_t> comb(n);
  for (std::size_t i = 0; i < n; ++i) comb[i] = i;
  bool more = true;
  while (more) {
    std::vector<std::vector<Rational>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = points[comb[i]];
    auto f = solve_square(a, Vector(n, Rational(1)));
    if (f) {
      bool supports = true;
      for (const auto& p : points)
        if (dot(*f, p) > 1) {
          supports = false;
          break;
        }
      if (supports) facets.push_back(*f);
    }
    more = false;
    for (std::size_t i = n; i-- > 0;) {
      if (comb[i] < i + m - n) {
        ++comb[i];
        for (std::size_t j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  detail::sort_unique(facets);
  if (facets.empty()) throw degeneracy_error("no supporting facets found");
  return facets;
}

/// Vertex enumeration from a facet list, by polarity: the facet functionals of
/// the ball are the vertices of the dual ball and vice versa, so this is facet
/// enumeration applied to the facet list viewed as a point set.
inline std::vector<Vector> hrep_to_vrep(const std::vector<Functional>& facets) {
  return vrep_to_hrep(facets);
}

}  // namespace normgeo
