#pragma once

#include <cstdint>
#include <vector>

#include "normgeo/polyspace.hpp"
#include "normgeo/sampling.hpp"

namespace normgeo {

/// Operator norm on a polyhedral space: ||T|| = max over ball vertices v of
/// ||T v||. Exact, since ||T x|| is convex over the ball.
inline Rational op_norm(const PolySpace& space, const OperatorMatrix& t) {
  if (t.dim() != space.dim) throw std::invalid_argument("operator dimension mismatch");
  Rational best = 0;
  for (const auto& v : space.vertices) {
    Rational n = norm(space, t.apply(v));
    if (n > best) best = n;
  }
  return best;
}

/// Numerical radius v(T) = sup |x*(Tx)| over norming pairs x*(x) = 1. Exact
/// via the finite state set of incident (ball vertex, facet functional)
/// pairs: both partial maximizations are linear, so vertex optima suffice on
/// either side.
inline Rational num_radius(const PolySpace& space, const OperatorMatrix& t) {
  if (t.dim() != space.dim) throw std::invalid_argument("operator dimension mismatch");
  Rational best = 0;
  for (std::size_t fi = 0; fi < space.facets.size(); ++fi) {
    const auto& f = space.facets[fi];
    for (int vj : space.incidence[fi]) {
      Rational val = rat_abs(dot(f, t.apply(space.vertices[vj])));
      if (val > best) best = val;
    }
  }
  return best;
}

/// Sampled upper bound on the numerical index n(E), with the witness
/// operator attaining it. The witness ratio equals lower_empirical exactly.
struct IndexEstimate {
  Rational lower_empirical;
  OperatorMatrix witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Draws seeded random rational matrices, tracks the minimum of
/// v(T)/||T||, then runs coordinate-wise local descent (rational step
/// halving, with zero as an extra candidate per coordinate) from the best
/// sample. The result is an upper bound on n(E) and empirical evidence for a
/// lower bound, never a proof.
inline IndexEstimate index_search(const PolySpace& space, std::size_t samples,
                                  std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("index_search needs samples >= 1");
  Rng rng(seed);
  const std::size_t n = space.dim;

  auto ratio_of = [&](const OperatorMatrix& t) -> std::pair<bool, Rational> {
    Rational nt = op_norm(space, t);
    if (nt == 0) return {false, 0};
    return {true, num_radius(space, t) / nt};
  };

  OperatorMatrix best = OperatorMatrix::identity(n);
  Rational best_ratio = 1;  // ratio of the identity
  for (std::size_t s = 0; s < samples; ++s) {
    OperatorMatrix t = rng.matrix(n);
    auto [ok, r] = ratio_of(t);
    if (ok && r < best_ratio) {
      best_ratio = r;
      best = t;
    }
  }

  // Local descent around the best sample.
  for (Rational step(1); step >= rat(1, 64); step /= 2) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Rational cur = best.entries[i][j];
          for (const Rational& cand :
               {Rational(cur + step), Rational(cur - step), Rational(0)}) {
            if (cand == cur) continue;
            OperatorMatrix t = best;
            t.entries[i][j] = cand;
            auto [ok, r] = ratio_of(t);
            if (ok && r < best_ratio) {
              best_ratio = r;
              best = t;
              improved = true;
            }
          }
        }
    }
  }

  return {best_ratio, best, samples, seed};
}

}  // namespace normgeo
