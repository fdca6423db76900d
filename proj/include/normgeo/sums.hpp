#pragma once

#include <string>
#include <vector>

#include "normgeo/errors.hpp"
#include "normgeo/polyspace.hpp"

namespace normgeo {

/// Desk-scale guardrail: product representations grow multiplicatively.
inline constexpr std::size_t kSumRepCap = 100000;

namespace detail {

inline std::size_t total_dim(const std::vector<PolySpace>& parts) {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.dim;
  return d;
}

inline std::string joined_labels(const std::vector<PolySpace>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i].label;
  }
  return s;
}

/// Embeds a block vector into the sum coordinates at the given offset.
inline std::vector<Rational> padded(const std::vector<Rational>& block, std::size_t offset,
                                    std::size_t dim) {
  std::vector<Rational> out(dim, Rational(0));
  for (std::size_t i = 0; i < block.size(); ++i) out[offset + i] = block[i];
  return out;
}

/// All concatenations picking one row from each part's list.
inline std::vector<std::vector<Rational>> cartesian(
    const std::vector<const std::vector<std::vector<Rational>>*>& lists, std::size_t dim) {
  std::size_t count = 1;
  for (const auto* l : lists) {
    count *= l->size();
    if (count > kSumRepCap)
      throw size_error("sum representation exceeds the cap of " + std::to_string(kSumRepCap));
  }
  std::vector<std::vector<Rational>> out;
  out.reserve(count);
  std::vector<std::size_t> pick(lists.size(), 0);
  while (true) {
    std::vector<Rational> row;
    row.reserve(dim);
    for (std::size_t i = 0; i < lists.size(); ++i)
      for (const auto& c : (*lists[i])[pick[i]]) row.push_back(c);
    out.push_back(std::move(row));
    std::size_t i = lists.size();
    while (i > 0 && ++pick[i - 1] == lists[i - 1]->size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace detail

/// l_infty-sum: the ball is the Cartesian product of the part balls.
/// Vertices are all tuples of part vertices; facets are part facets padded
/// with zeros. The norm of a tuple is the max of the part norms.
inline PolySpace linf_sum(const std::vector<PolySpace>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum of no parts");
  PolySpace s;
  s.dim = detail::total_dim(parts);
  s.label = "linf(" + detail::joined_labels(parts) + ")";
  std::vector<const std::vector<std::vector<Rational>>*> vlists;
  for (const auto& p : parts) vlists.push_back(&p.vertices);
  s.vertices = detail::cartesian(vlists, s.dim);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& f : p.facets) s.facets.push_back(detail::padded(f, offset, s.dim));
    offset += p.dim;
  }
  finalize(s);
  return s;
}

/// l_1-sum: the ball is the convex hull of the embedded part balls; the dual
/// ball is the product of the part dual balls. Vertices are part vertices
/// padded with zeros; facets are all tuples of part facets. The norm of a
/// tuple is the sum of the part norms.
inline PolySpace l1_sum(const std::vector<PolySpace>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum of no parts");
  PolySpace s;
  s.dim = detail::total_dim(parts);
  s.label = "l1(" + detail::joined_labels(parts) + ")";
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& v : p.vertices) s.vertices.push_back(detail::padded(v, offset, s.dim));
    offset += p.dim;
  }
  std::vector<const std::vector<std::vector<Rational>>*> flists;
  for (const auto& p : parts) flists.push_back(&p.facets);
  s.facets = detail::cartesian(flists, s.dim);
  finalize(s);
  return s;
}

/// C(K,E) for finite discrete K with |K| = k: isometrically the k-fold
/// l_infty-sum of E.
inline PolySpace ck_power(const PolySpace& e, std::size_t k) {
  if (k < 1) throw std::invalid_argument("ck_power needs k >= 1");
  PolySpace s = linf_sum(std::vector<PolySpace>(k, e));
  s.label = "C(K," + e.label + ")|K|=" + std::to_string(k);
  return s;
}

}  // namespace normgeo
