#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normgeo/polyspace.hpp"
#include "normgeo/sums.hpp"

namespace normgeo {
namespace spaces {

/// The 1-D space with unit ball [-1, 1].
inline PolySpace segment() {
  return make_space("segment", 1, {{Rational(1)}, {Rational(-1)}});
}

/// l_infty^n: the cube. n <= 4.
inline PolySpace square(std::size_t n = 2) {
  if (n < 1 || n > 4) throw std::invalid_argument("square(n) supports 1 <= n <= 4");
  std::vector<Vector> verts;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
    verts.push_back(std::move(v));
  }
  std::vector<Functional> facets;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      Functional f(n, Rational(0));
      f[i] = s;
      facets.push_back(std::move(f));
    }
  return make_space("square" + std::to_string(n), n, std::move(verts), std::move(facets));
}

/// l_1^n: the cross-polytope. n <= 4.
inline PolySpace diamond(std::size_t n = 2) {
  if (n < 1 || n > 4) throw std::invalid_argument("diamond(n) supports 1 <= n <= 4");
  std::vector<Vector> verts;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      Vector v(n, Rational(0));
      v[i] = s;
      verts.push_back(std::move(v));
    }
  std::vector<Functional> facets;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Functional f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = (mask >> i) & 1 ? 1 : -1;
    facets.push_back(std::move(f));
  }
  return make_space("diamond" + std::to_string(n), n, std::move(verts), std::move(facets));
}

/// The plane with hexagonal norm max{|eta|, |xi| + |eta|/2}.
inline PolySpace hexagon() {
  std::vector<Vector> verts = {{rat(1), rat(0)},   {rat(-1), rat(0)},
                               {rat(1, 2), rat(1)}, {rat(1, 2), rat(-1)},
                               {rat(-1, 2), rat(1)}, {rat(-1, 2), rat(-1)}};
  std::vector<Functional> facets = {{rat(0), rat(1)},  {rat(0), rat(-1)},
                                    {rat(1), rat(1, 2)}, {rat(1), rat(-1, 2)},
                                    {rat(-1), rat(1, 2)}, {rat(-1), rat(-1, 2)}};
  return make_space("hexagon", 2, std::move(verts), std::move(facets));
}

/// A rational octagon: conv{(+-1,0), (0,+-1), (+-2/3,+-2/3)}. Exploratory,
/// not the Euclidean-regular octagon.
inline PolySpace octagon() {
  std::vector<Vector> verts = {{rat(1), rat(0)},       {rat(-1), rat(0)},
                               {rat(0), rat(1)},       {rat(0), rat(-1)},
                               {rat(2, 3), rat(2, 3)},  {rat(2, 3), rat(-2, 3)},
                               {rat(-2, 3), rat(2, 3)}, {rat(-2, 3), rat(-2, 3)}};
  return make_space("octagon", 2, std::move(verts));
}

/// Finite truncation of the c0 (+)_infty hexagon space: the hexagon acting on
/// the first two coordinates, sup norm on the remaining k-2. k >= 2.
inline PolySpace hex_linf(std::size_t k) {
  if (k < 2) throw std::invalid_argument("hex_linf(k) needs k >= 2");
  if (k == 2) {
    PolySpace s = hexagon();
    s.label = "hex_linf2";
    return s;
  }
  std::vector<PolySpace> parts = {hexagon()};
  for (std::size_t i = 2; i < k; ++i) parts.push_back(segment());
  PolySpace s = linf_sum(parts);
  s.label = "hex_linf" + std::to_string(k);
  return s;
}

/// Named lookup used by the CLI and tests; empty when unknown.
inline std::optional<PolySpace> by_name(const std::string& name) {
  if (name == "segment") return segment();
  if (name == "hexagon") return hexagon();
  if (name == "octagon") return octagon();
  if (name.rfind("square", 0) == 0 && name.size() == 7) return square(name[6] - '0');
  if (name == "square") return square(2);
  if (name.rfind("diamond", 0) == 0 && name.size() == 8) return diamond(name[7] - '0');
  if (name == "diamond") return diamond(2);
  if (name.rfind("hex_linf", 0) == 0 && name.size() > 8) return hex_linf(std::stoul(name.substr(8)));
  return std::nullopt;
}

/// The full built-in catalog, validated by tests.
inline std::vector<PolySpace> all() {
  std::vector<PolySpace> out = {segment(), hexagon(), octagon()};
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(square(n));
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(diamond(n));
  out.push_back(hex_linf(3));
  out.push_back(hex_linf(4));
  return out;
}

}  // namespace spaces
}  // namespace normgeo
