#pragma once

#include <cstdint>
#include <random>

#include "normgeo/linalg.hpp"
#include "normgeo/polyspace.hpp"

namespace normgeo {

/// Seeded deterministic source of rational samples. Draws use the raw
/// engine stream (no library distributions), so a seed fixes the sample
/// sequence exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(int_in(-max_num, max_num), int_in(1, max_den));
  }

  Vector vector(std::size_t dim, std::int64_t max_num = 3, std::int64_t max_den = 3) {
    Vector v(dim);
    for (auto& c : v) c = rational(max_num, max_den);
    return v;
  }

  /// Exact unit-sphere point: a random rational convex combination of the
  /// vertices of a random facet. Such points have norm exactly 1.
  Vector sphere_point(const PolySpace& space) {
    std::size_t fi = static_cast<std::size_t>(int_in(0, static_cast<std::int64_t>(space.facets.size()) - 1));
    const auto& inc = space.incidence[fi];
    std::vector<std::int64_t> w(inc.size());
    std::int64_t total = 0;
    for (auto& wi : w) {
      wi = int_in(0, 9);
      total += wi;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    Vector p(space.dim, Rational(0));
    for (std::size_t i = 0; i < inc.size(); ++i)
      p = add(p, scale(Rational(w[i], total), space.vertices[inc[i]]));
    return p;
  }

  /// Exact ball point: a sphere point scaled by a rational in [0, 1].
  Vector ball_point(const PolySpace& space) {
    return scale(Rational(int_in(0, 10), 10), sphere_point(space));
  }

  /// Random small-rational matrix; entries uniform on {-k..k}/d.
  OperatorMatrix matrix(std::size_t dim, std::int64_t k = 2, std::int64_t max_den = 2) {
    OperatorMatrix m{std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim))};
    for (auto& row : m.entries)
      for (auto& e : row) e = rational(k, max_den);
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

/// Random full-dimensional symmetric polygon ball in the plane, built by
/// taking the symmetric hull of a few random rational points.
inline PolySpace random_symmetric_polygon(Rng& rng, const std::string& label = "random2d") {
  while (true) {
    std::vector<Vector> pts;
    std::int64_t count = rng.int_in(2, 5);
    for (std::int64_t i = 0; i < count; ++i) {
      Vector p = rng.vector(2, 3, 3);
      if (is_zero(p)) continue;
      pts.push_back(p);
      pts.push_back(negate(p));
    }
    if (pts.empty() || rank(pts) < 2) continue;
    auto facets = vrep_to_hrep(pts);
    auto verts = hrep_to_vrep(facets);  // extreme points only
    return make_space(label, 2, std::move(verts), std::move(facets));
  }
}

}  // namespace normgeo
