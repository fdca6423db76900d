// Test-only brute-force oracles for 2-D spaces. These deliberately avoid the
// LP path: distances come from dense grids over boundary segments, membership
// from direct functional evaluation, hulls from the combinatorial enumerator.
#pragma once

#include <algorithm>
#include <vector>

#include "normgeo/hull.hpp"
#include "normgeo/polyspace.hpp"

namespace normgeo::oracle {

struct Segment {
  Vector a, b;
};

/// Facet segments of a 2-D space (each facet touches exactly its incident
/// vertices; endpoints are the lexicographic extremes of that set).
inline std::vector<Segment> facet_segments(const PolySpace& space) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < space.facets.size(); ++i) {
    const auto& inc = space.incidence[i];
    if (inc.size() < 2) continue;
    std::vector<Vector> pts;
    for (int j : inc) pts.push_back(space.vertices[j]);
    std::sort(pts.begin(), pts.end(), detail::lex_less);
    segs.push_back({pts.front(), pts.back()});
  }
  return segs;
}

inline Vector lerp(const Vector& a, const Vector& b, const Rational& t) {
  return add(a, scale(t, sub(b, a)));
}

/// Min distance from y to grid points of the segment, resolution + 1 samples.
inline Rational segment_min(const PolySpace& space, const Vector& y, const Segment& s,
                            long resolution) {
  Rational best = norm(space, sub(y, s.a));
  for (long i = 1; i <= resolution; ++i) {
    Rational d = norm(space, sub(y, lerp(s.a, s.b, Rational(i, resolution))));
    if (d < best) best = d;
  }
  return best;
}

/// Endpoints of the chord {f(z) = 1-eps} within the ball.
inline std::vector<Vector> chord_points(const PolySpace& space, const Functional& f,
                                        const Rational& eps) {
  std::vector<Vector> pts;
  Rational level = 1 - eps;
  for (const auto& s : facet_segments(space)) {
    Rational fa = dot(f, s.a), fb = dot(f, s.b);
    if (fa == fb) {
      if (fa == level) {
        pts.push_back(s.a);
        pts.push_back(s.b);
      }
      continue;
    }
    Rational t = (level - fa) / (fb - fa);
    if (t >= 0 && t <= 1) pts.push_back(lerp(s.a, s.b, t));
  }
  std::sort(pts.begin(), pts.end(), detail::lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Grid distance to the closed slice {z in B : f(z) >= 1-eps}. Error bound:
/// the sampled boundary net has spacing <= 2/resolution in the space's norm.
inline Rational dist_to_slice(const PolySpace& space, const Vector& y, const Functional& f,
                              const Rational& eps, long resolution) {
  if (norm(space, y) <= 1 && dot(f, y) >= 1 - eps) return 0;
  Rational best = -1;
  auto consider = [&](const Rational& d) {
    if (best < 0 || d < best) best = d;
  };
  Rational level = 1 - eps;
  for (const auto& s : facet_segments(space)) {
    for (long i = 0; i <= resolution; ++i) {
      Vector p = lerp(s.a, s.b, Rational(i, resolution));
      if (dot(f, p) >= level) consider(norm(space, sub(y, p)));
    }
  }
  auto chord = chord_points(space, f, eps);
  for (std::size_t i = 0; i + 1 < chord.size(); ++i)
    consider(segment_min(space, y, {chord[i], chord[i + 1]}, resolution));
  return best;
}

/// Grid distance to the facet of index fi.
inline Rational dist_to_face(const PolySpace& space, const Vector& y, std::size_t fi,
                             long resolution) {
  const auto& inc = space.incidence[fi];
  std::vector<Vector> pts;
  for (int j : inc) pts.push_back(space.vertices[j]);
  std::sort(pts.begin(), pts.end(), detail::lex_less);
  return segment_min(space, y, {pts.front(), pts.back()}, resolution);
}

/// Grid distance to aco(S) = conv(S u -S) for the closed slice S. The hull of
/// the (finitely many) slice corners is taken combinatorially, then the hull
/// boundary is sampled. Error bound 2/resolution as above.
inline Rational dist_to_aco_slice(const PolySpace& space, const Vector& y, const Functional& f,
                                  const Rational& eps, long resolution) {
  std::vector<Vector> corners;
  for (const auto& v : space.vertices)
    if (dot(f, v) >= 1 - eps) corners.push_back(v);
  for (const auto& p : chord_points(space, f, eps)) corners.push_back(p);
  std::size_t base = corners.size();
  for (std::size_t i = 0; i < base; ++i) corners.push_back(negate(corners[i]));

  auto hull_facets = vrep_to_hrep(corners);
  bool inside = true;
  for (const auto& h : hull_facets)
    if (dot(h, y) > 1) {
      inside = false;
      break;
    }
  if (inside) return 0;

  Rational best = -1;
  for (const auto& h : hull_facets) {
    std::vector<Vector> on;
    for (const auto& c : corners)
      if (dot(h, c) == 1) on.push_back(c);
    std::sort(on.begin(), on.end(), detail::lex_less);
    Rational d = segment_min(space, y, {on.front(), on.back()}, resolution);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace normgeo::oracle
