#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "normgeo/rational.hpp"

namespace normgeo {

enum class Condition { AlmostCL, StrongGL, GLatEps, LushAtEps, Valid };
enum class Verdict { certified, failed, inconclusive };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::AlmostCL: return "almost-cl";
    case Condition::StrongGL: return "strong-gl";
    case Condition::GLatEps: return "gl-at-eps";
    case Condition::LushAtEps: return "lush-at-eps";
    case Condition::Valid: return "valid";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::failed: return "failed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// One (facet, vertex) cell of a certification run together with the exact
/// value computed there.
struct Witness {
  int facet = -1;
  int vertex = -1;
  Rational value;
};

/// Machine-checkable record of a geometric condition check. Replaying the
/// witnesses must reproduce the recorded values exactly.
struct Certificate {
  Condition condition = Condition::Valid;
  Verdict verdict = Verdict::failed;
  std::optional<Rational> bound;
  std::vector<Witness> witnesses;
  std::optional<Rational> eps;
  std::string space_label;
  std::string detail;  // human-readable note, e.g. the violated invariant

  bool ok() const { return verdict == Verdict::certified; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["condition"] = to_string(condition);
    j["verdict"] = to_string(verdict);
    j["bound"] = bound ? nlohmann::json(to_string(*bound)) : nlohmann::json(nullptr);
    j["eps"] = eps ? nlohmann::json(to_string(*eps)) : nlohmann::json(nullptr);
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses)
      j["witnesses"].push_back({{"facet", w.facet}, {"vertex", w.vertex}, {"value", to_string(w.value)}});
    j["space_label"] = space_label;
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

}  // namespace normgeo
