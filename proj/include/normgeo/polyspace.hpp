#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "normgeo/certificate.hpp"
#include "normgeo/errors.hpp"
#include "normgeo/hull.hpp"
#include "normgeo/linalg.hpp"

namespace normgeo {

/// A finite-dimensional normed space given by the symmetric polytope unit
/// ball: V-rep (vertices), H-rep (facet functionals, B = {x : f(x) <= 1}),
/// and the facet/vertex incidence. Immutable after validation; all
/// operations on it are pure.
struct PolySpace {
  std::size_t dim = 0;
  std::vector<Vector> vertices;
  std::vector<Functional> facets;
  std::vector<std::vector<int>> incidence;  // per facet: vertex indices v with f(v) = 1
  std::string label;

  int facet_index(const Functional& f) const {
    auto it = std::find(facets.begin(), facets.end(), f);
    return it == facets.end() ? -1 : static_cast<int>(it - facets.begin());
  }
};

/// Norm from the H-rep: max over facets f of f(x). The facet list is
/// symmetric, so this equals max |f(x)|.
inline Rational norm(const PolySpace& space, const Vector& x) {
  if (x.size() != space.dim) throw std::invalid_argument("norm: dimension mismatch");
  Rational best = 0;
  for (const auto& f : space.facets) {
    Rational v = dot(f, x);
    if (v > best) best = v;
  }
  return best;
}

/// Dual norm from the V-rep: max over ball vertices v of |f(v)|. Equals 1
/// exactly iff f is a unit functional.
inline Rational dual_norm(const PolySpace& space, const Functional& f) {
  if (f.size() != space.dim) throw std::invalid_argument("dual_norm: dimension mismatch");
  Rational best = 0;
  for (const auto& v : space.vertices) {
    Rational val = rat_abs(dot(f, v));
    if (val > best) best = val;
  }
  return best;
}

/// Canonically sorts both representations and rebuilds incidence. Every
/// constructor funnels through here so equal spaces are byte-identical.
inline void finalize(PolySpace& space) {
  detail::sort_unique(space.vertices);
  detail::sort_unique(space.facets);
  space.incidence.assign(space.facets.size(), {});
  for (std::size_t i = 0; i < space.facets.size(); ++i)
    for (std::size_t j = 0; j < space.vertices.size(); ++j)
      if (dot(space.facets[i], space.vertices[j]) == 1)
        space.incidence[i].push_back(static_cast<int>(j));
}

/// Builds a space from its vertex list, deriving facets by hull conversion
/// when none are supplied (dimension <= 3 only).
inline PolySpace make_space(std::string label, std::size_t dim, std::vector<Vector> vertices,
                            std::vector<Functional> facets = {}) {
  PolySpace s;
  s.label = std::move(label);
  s.dim = dim;
  s.vertices = std::move(vertices);
  s.facets = facets.empty() ? vrep_to_hrep(s.vertices) : std::move(facets);
  finalize(s);
  return s;
}

namespace detail {

inline std::size_t binomial_capped(std::size_t m, std::size_t n, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r = r * (m - i) / (i + 1);
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace detail

/// Checks every PolySpace invariant. Failures are reported in the
/// certificate (first violated invariant plus witness), never thrown.
///
/// The vertex/facet cross checks make the two representations provably
/// consistent: every vertex lies on the sphere with n independent active
/// facets, every facet supports n independent vertices, and (when the
/// subset count is affordable) every basic solution of the H-rep on the
/// sphere appears in the vertex list.
inline Certificate validate(const PolySpace& space) {
  Certificate cert;
  cert.condition = Condition::Valid;
  cert.space_label = space.label;
  cert.verdict = Verdict::failed;

  auto fail = [&](std::string what, int facet = -1, int vertex = -1, Rational value = 0) {
    cert.detail = std::move(what);
    cert.witnesses.push_back({facet, vertex, value});
    return cert;
  };

  if (space.dim == 0) return fail("dimension must be positive");
  if (space.vertices.empty() || space.facets.empty()) return fail("empty representation");
  for (const auto& v : space.vertices)
    if (v.size() != space.dim) return fail("vertex length != dim");
  for (const auto& f : space.facets)
    if (f.size() != space.dim) return fail("facet length != dim");
  if (space.incidence.size() != space.facets.size()) return fail("incidence not built (call finalize)");

  // symmetry of both representations
  for (std::size_t j = 0; j < space.vertices.size(); ++j) {
    auto neg = negate(space.vertices[j]);
    if (!std::binary_search(space.vertices.begin(), space.vertices.end(), neg, detail::lex_less))
      return fail("symmetry: vertex without its negative", -1, static_cast<int>(j));
  }
  for (std::size_t i = 0; i < space.facets.size(); ++i) {
    auto neg = negate(space.facets[i]);
    if (!std::binary_search(space.facets.begin(), space.facets.end(), neg, detail::lex_less))
      return fail("symmetry: facet without its negative", static_cast<int>(i));
  }

  // every vertex lies exactly on the sphere
  for (std::size_t j = 0; j < space.vertices.size(); ++j) {
    Rational n = norm(space, space.vertices[j]);
    if (n != 1) return fail("vertex-on-sphere: max facet value != 1", -1, static_cast<int>(j), n);
  }

  // fullness
  if (rank(space.vertices) < space.dim) return fail("fullness: vertices do not span the dimension");

  // each facet genuinely supports: value 1 on n independent vertices
  for (std::size_t i = 0; i < space.facets.size(); ++i) {
    std::vector<Vector> touched;
    for (int j : space.incidence[i]) touched.push_back(space.vertices[j]);
    if (rank(touched) < space.dim)
      return fail("facet-support: facet is dominated (touches < dim independent vertices)",
                  static_cast<int>(i));
  }

  // each vertex is a true vertex: n independent active facets
  for (std::size_t j = 0; j < space.vertices.size(); ++j) {
    std::vector<Functional> active;
    for (std::size_t i = 0; i < space.facets.size(); ++i)
      if (dot(space.facets[i], space.vertices[j]) == 1) active.push_back(space.facets[i]);
    if (rank(active) < space.dim)
      return fail("vertex-minimality: vertex is not a vertex of the H-polytope", -1,
                  static_cast<int>(j));
  }

  // completeness: every H-rep vertex appears in the vertex list
  constexpr std::size_t kSubsetCap = 200000;
  if (detail::binomial_capped(space.facets.size(), space.dim, kSubsetCap) <= kSubsetCap) {
    const std::size_t m = space.facets.size(), n = space.dim;
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = i;
    bool more = true;
    while (more) {
      std::vector<std::vector<Rational>> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = space.facets[comb[i]];
      auto x = solve_square(a, Vector(n, Rational(1)));
      if (x && norm(space, *x) == 1) {
        if (!std::binary_search(space.vertices.begin(), space.vertices.end(), *x,
                                detail::lex_less))
          return fail("consistency: H-rep has a sphere vertex missing from the vertex list",
                      static_cast<int>(comb[0]));
      }
      more = false;
      for (std::size_t i = n; i-- > 0;) {
        if (comb[i] < i + m - n) {
          ++comb[i];
          for (std::size_t j2 = i + 1; j2 < n; ++j2) comb[j2] = comb[j2 - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }

  cert.verdict = Verdict::certified;
  return cert;
}

}  // namespace normgeo
