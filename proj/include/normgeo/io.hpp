#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "normgeo/polyspace.hpp"

namespace normgeo {

/// Space file schema:
///   { "label": str, "dim": int,
///     "vertices": [["p/q", ...], ...],
///     "facets": optional, same shape }
/// Rationals are strings so no float ever enters the round trip.
inline nlohmann::json space_to_json(const PolySpace& space) {
  nlohmann::json j;
  j["label"] = space.label;
  j["dim"] = space.dim;
  auto rows = [](const std::vector<std::vector<Rational>>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : list) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& c : row) r.push_back(to_string(c));
      out.push_back(std::move(r));
    }
    return out;
  };
  j["vertices"] = rows(space.vertices);
  j["facets"] = rows(space.facets);
  return j;
}

struct LoadedSpace {
  PolySpace space;
  Certificate cert;  // validation result; loader always validates
};

inline LoadedSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("space file: top level must be an object");
  PolySpace s;
  s.label = j.value("label", std::string("unnamed"));
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw std::invalid_argument("space file: missing or invalid 'dim'");
  s.dim = j["dim"].get<std::size_t>();
  auto parse_rows = [&](const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw std::invalid_argument(std::string("space file: '") + what + "' must be an array");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : arr) {
      if (!row.is_array() || row.size() != s.dim)
        throw std::invalid_argument(std::string("space file: each ") + what +
                                    " row must have length dim");
      std::vector<Rational> r;
      for (const auto& c : row) {
        if (!c.is_string()) throw std::invalid_argument("space file: rationals must be strings");
        r.push_back(parse_rational(c.get<std::string>()));
      }
      rows.push_back(std::move(r));
    }
    return rows;
  };
  s.vertices = parse_rows(j.at("vertices"), "vertex");
  if (j.contains("facets") && !j["facets"].is_null())
    s.facets = parse_rows(j["facets"], "facet");
  else
    s.facets = vrep_to_hrep(s.vertices);
  finalize(s);
  return {s, validate(s)};
}

inline LoadedSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open space file: " + path);
  nlohmann::json j;
  in >> j;  // throws nlohmann::json::parse_error with byte position on bad input
  return space_from_json(j);
}

inline void save_space(const PolySpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write space file: " + path);
  out << space_to_json(space).dump(2) << "\n";
}

}  // namespace normgeo
