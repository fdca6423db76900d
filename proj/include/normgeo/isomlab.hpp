#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "normgeo/errors.hpp"
#include "normgeo/lp.hpp"
#include "normgeo/polyspace.hpp"
#include "normgeo/sampling.hpp"

namespace normgeo {

/// A self-map of the unit sphere, either the restriction of a linear
/// ball symmetry or a vertex bijection extended affinely facet by facet.
/// Instances are only constructed through admission checks that verify
/// distance preservation, so holding one is evidence in itself.
struct SphereIsometry {
  enum class Kind { linear, vertex_map };
  Kind kind = Kind::linear;
  OperatorMatrix matrix;           // kind == linear
  std::vector<int> vertex_bijection;  // kind == vertex_map
  PolySpace space;                 // domain == codomain for the maps built here

  /// Image of a sphere point. For vertex maps the point is written as a
  /// convex combination of its facet's vertices and the combination is
  /// transported through the bijection.
  Vector apply(const Vector& x) const {
    if (kind == Kind::linear) return matrix.apply(x);
    if (norm(space, x) != 1) throw std::invalid_argument("vertex-map isometry acts on the sphere only");
    for (std::size_t fi = 0; fi < space.facets.size(); ++fi) {
      if (dot(space.facets[fi], x) != 1) continue;
      const auto& inc = space.incidence[fi];
      // convex weights of x over the facet's vertices
      LinearProgram lp(inc.size());
      for (std::size_t j = 0; j < inc.size(); ++j) lp.lower[j] = Rational(0);
      Functional ones(inc.size(), Rational(1));
      lp.add(ones, Relation::eq, 1);
      for (std::size_t d = 0; d < space.dim; ++d) {
        Functional row(inc.size());
        for (std::size_t j = 0; j < inc.size(); ++j) row[j] = space.vertices[inc[j]][d];
        lp.add(row, Relation::eq, x[d]);
      }
      auto res = solve(lp);
      if (res.status != LpStatus::optimal) continue;
      Vector img(space.dim, Rational(0));
      for (std::size_t j = 0; j < inc.size(); ++j)
        img = add(img, scale(res.point[j], space.vertices[vertex_bijection[inc[j]]]));
      return img;
    }
    throw std::logic_error("sphere point lies on no facet");
  }
};

/// All linear maps sending the vertex set bijectively to itself; they
/// preserve the ball, hence the norm, and the facet set is re-verified.
/// Found by brute force over images of a vertex basis.
inline std::vector<OperatorMatrix> symmetry_group(const PolySpace& space) {
  constexpr std::size_t kVertexCap = 24;
  if (space.vertices.size() > kVertexCap)
    throw size_error("symmetry_group: vertex count exceeds the guardrail of 24");

  const std::size_t n = space.dim, m = space.vertices.size();
  // deterministic vertex basis: first n linearly independent vertices
  std::vector<std::size_t> basis;
  std::vector<Vector> chosen;
  for (std::size_t j = 0; j < m && basis.size() < n; ++j) {
    chosen.push_back(space.vertices[j]);
    if (rank(chosen) == basis.size() + 1)
      basis.push_back(j);
    else
      chosen.pop_back();
  }
  if (basis.size() < n) throw degeneracy_error("vertices do not span the space");

  auto vertex_set_contains = [&](const Vector& v) {
    return std::binary_search(space.vertices.begin(), space.vertices.end(), v, detail::lex_less);
  };

  // M = W B^{-1} with B, W the basis/image column matrices.
  std::vector<std::vector<Rational>> bt(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < n; ++d) bt[d][i] = space.vertices[basis[i]][d];
  auto binv = invert(OperatorMatrix{bt});
  if (!binv) throw degeneracy_error("vertex basis is singular");

  std::vector<OperatorMatrix> group;
  std::vector<std::size_t> image(n, 0);
  std::vector<bool> used(m, false);
  auto try_assignment = [&]() {
    std::vector<std::vector<Rational>> wt(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < n; ++d) wt[d][i] = space.vertices[image[i]][d];
    OperatorMatrix mmat = OperatorMatrix{wt}.compose(*binv);

    std::vector<Vector> images;
    for (const auto& v : space.vertices) {
      Vector iv = mmat.apply(v);
      if (!vertex_set_contains(iv)) return;
      images.push_back(std::move(iv));
    }
    std::sort(images.begin(), images.end(), detail::lex_less);
    if (std::unique(images.begin(), images.end()) != images.end()) return;  // not a bijection
    // facet set preservation: f o M must be a facet for every facet f
    for (const auto& f : space.facets) {
      Functional fm(n, Rational(0));
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t k = 0; k < n; ++k) fm[d] += f[k] * mmat.entries[k][d];
      if (!std::binary_search(space.facets.begin(), space.facets.end(), fm, detail::lex_less))
        return;
    }
    if (std::find(group.begin(), group.end(), mmat) == group.end()) group.push_back(mmat);
  };

  // enumerate injective basis-image tuples in lexicographic order
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      for (std::size_t i = 0; i < n; ++i) image[i] = stack[i];
      try_assignment();
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      stack.push_back(j);
      self(self, depth + 1);
      stack.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0);
  return group;
}

inline SphereIsometry linear_isometry(const PolySpace& space, OperatorMatrix m) {
  SphereIsometry t;
  t.kind = SphereIsometry::Kind::linear;
  t.matrix = std::move(m);
  t.space = space;
  return t;
}

/// Admission check for a vertex-bijection candidate: it must be a
/// permutation that preserves all pairwise vertex distances and map every
/// facet's vertex set onto some facet's vertex set. Returns the isometry or
/// a rejection reason.
inline std::optional<SphereIsometry> admit_vertex_map(const PolySpace& space,
                                                      const std::vector<int>& perm,
                                                      std::string* reason = nullptr) {
  auto reject = [&](const std::string& why) -> std::optional<SphereIsometry> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  const std::size_t m = space.vertices.size();
  if (perm.size() != m) return reject("bijection has wrong size");
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= m || seen[p]) return reject("not a bijection");
    seen[p] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational before = norm(space, sub(space.vertices[i], space.vertices[j]));
      Rational after = norm(space, sub(space.vertices[perm[i]], space.vertices[perm[j]]));
      if (before != after)
        return reject("pairwise vertex distance not preserved at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  for (const auto& inc : space.incidence) {
    std::vector<int> img;
    for (int j : inc) img.push_back(perm[j]);
    std::sort(img.begin(), img.end());
    bool is_facet = false;
    for (const auto& other : space.incidence)
      if (other == img) {
        is_facet = true;
        break;
      }
    if (!is_facet) return reject("facet image is not a facet");
  }
  SphereIsometry t;
  t.kind = SphereIsometry::Kind::vertex_map;
  t.vertex_bijection = perm;
  t.space = space;
  return t;
}

/// Positively homogeneous extension: 0 at 0, else ||x|| T(x / ||x||).
inline Vector extend_homogeneous(const SphereIsometry& t, const Vector& x) {
  if (is_zero(x)) return Vector(x.size(), Rational(0));
  Rational n = norm(t.space, x);
  return scale(n, t.apply(scale(1 / n, x)));
}

struct TrialViolation {
  Vector x, y;
  Rational lambda;  // only meaningful for the inequality check
};

/// Outcome of a sampled exact check; violations carry witnesses.
struct TrialReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t equalities = 0;
  std::vector<TrialViolation> sample;  // first few violations
};

inline std::vector<Rational> default_lambda_grid() {
  return {rat(0), rat(1, 4), rat(1, 2), rat(1), rat(3, 2), rat(2), rat(4)};
}

/// Samples sphere points x, y and lambda >= 0 from the grid and asserts
/// ||T(x) - lambda T(y)|| >= ||x - lambda y|| exactly per trial.
inline TrialReport check_mup_inequality(const SphereIsometry& t, std::size_t trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials >= 1 required");
  Rng rng(seed);
  auto grid = default_lambda_grid();
  TrialReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Vector x = rng.sphere_point(t.space);
    Vector y = rng.sphere_point(t.space);
    Rational lambda = grid[rng.int_in(0, static_cast<std::int64_t>(grid.size()) - 1)];
    Rational lhs = norm(t.space, sub(t.apply(x), scale(lambda, t.apply(y))));
    Rational rhs = norm(t.space, sub(x, scale(lambda, y)));
    if (lhs < rhs) {
      ++report.violations;
      if (report.sample.size() < 5) report.sample.push_back({x, y, lambda});
    } else if (lhs == rhs) {
      ++report.equalities;
    }
  }
  return report;
}

/// Samples pairs and checks additivity of the homogeneous extension
/// exactly. Zero violations are required for linear isometries; for
/// vertex-map candidates violations witness that the map is not the
/// restriction of a linear one.
inline TrialReport linearity_check(const SphereIsometry& t, std::size_t trials,
                                   std::uint64_t seed) {
  Rng rng(seed);
  TrialReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    Vector x = rng.vector(t.space.dim);
    Vector y = rng.vector(t.space.dim);
    Vector lhs = extend_homogeneous(t, add(x, y));
    Vector rhs = add(extend_homogeneous(t, x), extend_homogeneous(t, y));
    if (lhs != rhs) {
      ++report.violations;
      if (report.sample.size() < 5) report.sample.push_back({x, y, rat(0)});
    } else {
      ++report.equalities;
    }
  }
  return report;
}

}  // namespace normgeo
