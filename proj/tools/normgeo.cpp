// normgeo: certify slice-geometry conditions of polyhedral normed spaces,
// estimate numerical indices, and test sphere-isometry extension behavior.
//
// Exit codes: 0 = certified/clean, 1 = failed certificate or detected
// violation, 2 = input error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "normgeo/builtin.hpp"
#include "normgeo/certify.hpp"
#include "normgeo/io.hpp"
#include "normgeo/isomlab.hpp"
#include "normgeo/numindex.hpp"
#include "normgeo/sampling.hpp"
#include "normgeo/sums.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace normgeo;
using nlohmann::json;

/// Accepts either a space file path or a built-in space name.
PolySpace resolve_space(const std::string& ref) {
  if (std::filesystem::exists(ref)) {
    auto loaded = load_space(ref);
    if (!loaded.cert.ok())
      throw std::invalid_argument("space file '" + ref + "' fails validation: " + loaded.cert.detail);
    return loaded.space;
  }
  if (auto builtin = spaces::by_name(ref)) return *builtin;
  throw std::invalid_argument("'" + ref + "' is neither a readable file nor a built-in space name");
}

json report_header() {
  json j;
  j["tool"] = "normgeo";
  j["version"] = kVersion;
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
}

int run_validate(const std::string& ref, const std::string& format) {
  Certificate cert;
  if (std::filesystem::exists(ref)) {
    auto loaded = load_space(ref);
    cert = loaded.cert;
  } else if (auto builtin = spaces::by_name(ref)) {
    cert = validate(*builtin);
  } else {
    throw std::invalid_argument("'" + ref + "' not found");
  }
  json j = report_header();
  j["certificate"] = cert.to_json();
  emit(j, format);
  if (format == "text") {
    std::cout << cert.space_label << ": " << to_string(cert.verdict);
    if (!cert.detail.empty()) std::cout << " (" << cert.detail << ")";
    if (!cert.witnesses.empty())
      std::cout << " witness facet=" << cert.witnesses[0].facet
                << " vertex=" << cert.witnesses[0].vertex;
    std::cout << "\n";
  }
  return cert.ok() ? 0 : 1;
}

void print_cert(const Certificate& cert, const std::string& format) {
  if (format == "text") {
    std::cout << cert.space_label << " " << to_string(cert.condition);
    if (cert.eps) std::cout << " eps=" << to_string(*cert.eps);
    std::cout << ": " << to_string(cert.verdict);
    if (cert.bound) std::cout << ", bound " << to_string(*cert.bound);
    std::cout << "\n";
  }
}

int run_check(const std::string& ref, const std::string& mode,
              const std::vector<std::string>& eps_args, const std::string& format) {
  PolySpace space = resolve_space(ref);
  std::vector<Rational> grid = default_eps_grid();
  if (!eps_args.empty()) {
    grid.clear();
    for (const auto& e : eps_args) grid.push_back(parse_rational(e));
  }
  std::vector<Certificate> certs;
  if (mode == "almost-cl") {
    certs.push_back(almost_cl_check(space));
  } else if (mode == "strong-gl") {
    certs.push_back(strong_gl_certify(space));
  } else if (mode == "gl-eps") {
    for (const auto& e : grid) certs.push_back(gl_certify_eps(space, e));
  } else if (mode == "lush") {
    for (const auto& e : grid) certs.push_back(lush_check_eps(space, e));
  } else {
    throw std::invalid_argument("unknown mode '" + mode + "'");
  }
  json j = report_header();
  j["certificates"] = json::array();
  bool all_ok = true;
  for (const auto& c : certs) {
    j["certificates"].push_back(c.to_json());
    print_cert(c, format);
    all_ok = all_ok && c.ok();
  }
  emit(j, format);
  return all_ok ? 0 : 1;
}

int run_index(const std::string& ref, std::size_t samples, std::uint64_t seed,
              const std::string& format) {
  PolySpace space = resolve_space(ref);
  auto est = index_search(space, samples, seed);
  json j = report_header();
  j["space_label"] = space.label;
  j["samples"] = est.samples;
  j["seed"] = est.seed;
  j["lower_empirical"] = to_string(est.lower_empirical);
  json w = json::array();
  for (const auto& row : est.witness.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    w.push_back(std::move(r));
  }
  j["witness"] = std::move(w);
  emit(j, format);
  if (format == "text")
    std::cout << space.label << " empirical index bound: " << to_string(est.lower_empirical)
              << " (" << est.samples << " samples, seed " << est.seed << ")\n";
  return 0;
}

int run_sum(const std::vector<std::string>& part_refs, const std::string& kind,
            std::size_t repeat, const std::string& out, const std::string& format) {
  std::vector<PolySpace> parts;
  for (const auto& r : part_refs) parts.push_back(resolve_space(r));
  PolySpace sum;
  if (kind == "l1") {
    sum = l1_sum(parts);
  } else if (kind == "linf") {
    sum = linf_sum(parts);
  } else if (kind == "ck") {
    if (parts.size() != 1) throw std::invalid_argument("ck sum takes exactly one part");
    sum = ck_power(parts[0], repeat);
  } else {
    throw std::invalid_argument("unknown sum kind '" + kind + "'");
  }
  auto cert = validate(sum);
  if (!out.empty()) save_space(sum, out);
  json j = report_header();
  j["space"] = space_to_json(sum);
  j["certificate"] = cert.to_json();
  emit(j, format);
  if (format == "text")
    std::cout << sum.label << ": dim " << sum.dim << ", " << sum.vertices.size()
              << " vertices, " << sum.facets.size() << " facets, validation "
              << to_string(cert.verdict) << (out.empty() ? "" : ", written to " + out) << "\n";
  return cert.ok() ? 0 : 1;
}

int run_isom(const std::string& ref, std::size_t trials, std::uint64_t seed,
             const std::string& format) {
  PolySpace space = resolve_space(ref);
  auto group = symmetry_group(space);
  json j = report_header();
  j["space_label"] = space.label;
  j["group_size"] = group.size();
  j["trials"] = trials;
  j["seed"] = seed;
  j["elements"] = json::array();
  bool clean = true;
  for (std::size_t gi = 0; gi < group.size(); ++gi) {
    auto iso = linear_isometry(space, group[gi]);
    auto mup = check_mup_inequality(iso, trials, seed + gi);
    auto lin = linearity_check(iso, trials, seed + gi);
    clean = clean && mup.violations == 0 && lin.violations == 0;
    json e;
    json mat = json::array();
    for (const auto& row : group[gi].entries) {
      json r = json::array();
      for (const auto& c : row) r.push_back(to_string(c));
      mat.push_back(std::move(r));
    }
    e["matrix"] = std::move(mat);
    e["mup_violations"] = mup.violations;
    e["mup_equalities"] = mup.equalities;
    e["linearity_violations"] = lin.violations;
    j["elements"].push_back(std::move(e));
    if (format == "text")
      std::cout << "element " << gi << ": mup violations " << mup.violations << "/" << trials
                << " (equalities " << mup.equalities << "), linearity violations "
                << lin.violations << "/" << trials << "\n";
  }
  emit(j, format);
  if (format == "text")
    std::cout << space.label << ": symmetry group of size " << group.size() << ", "
              << (clean ? "no violations" : "VIOLATIONS FOUND") << "\n";
  return clean ? 0 : 1;
}

int run_oracle(std::size_t instances, std::uint64_t seed, long resolution,
               const std::string& format) {
  // Replays the boundary-grid brute-force distance oracle against the LP
  // values on random 2-D instances; the grid value may exceed the LP value
  // by at most 2/resolution.
  Rng rng(seed);
  Rational worst = 0;
  const Rational tol(2, resolution);
  for (std::size_t i = 0; i < instances; ++i) {
    PolySpace s = (rng.int_in(0, 1) == 0) ? *spaces::by_name(rng.int_in(0, 1) ? "hexagon" : "octagon")
                                          : random_symmetric_polygon(rng);
    Vector y = rng.vector(2, 2, 2);
    const Functional& f = s.facets[rng.int_in(0, static_cast<std::int64_t>(s.facets.size()) - 1)];
    Rational eps = rat(1, rng.int_in(2, 8));
    Rational lp = dist_to_slice(s, y, f, eps);
    // inline boundary grid: walk every facet segment plus the chord
    Rational grid = -1;
    {
      Rational level = 1 - eps;
      auto consider = [&](const Vector& p) {
        if (dot(f, p) < level) return;
        Rational d = norm(s, sub(y, p));
        if (grid < 0 || d < grid) grid = d;
      };
      if (norm(s, y) <= 1 && dot(f, y) >= level) grid = 0;
      std::vector<Vector> chord;
      for (std::size_t fi = 0; fi < s.facets.size() && grid != 0; ++fi) {
        const auto& inc = s.incidence[fi];
        if (inc.size() < 2) continue;
        const Vector &a = s.vertices[inc.front()], &b = s.vertices[inc.back()];
        for (long t = 0; t <= resolution; ++t)
          consider(add(a, scale(Rational(t, resolution), sub(b, a))));
        Rational fa = dot(f, a), fb = dot(f, b);
        if (fa != fb) {
          Rational tt = (level - fa) / (fb - fa);
          if (tt >= 0 && tt <= 1) chord.push_back(add(a, scale(tt, sub(b, a))));
        }
      }
      if (grid != 0 && chord.size() >= 2)
        for (long t = 0; t <= resolution; ++t) {
          Vector p = add(chord[0], scale(Rational(t, resolution), sub(chord[1], chord[0])));
          Rational d = norm(s, sub(y, p));
          if (grid < 0 || d < grid) grid = d;
        }
    }
    if (grid < lp) {
      std::cerr << "oracle: grid value fell below the LP minimum (LP bug)\n";
      return 1;
    }
    Rational dev = grid - lp;
    if (dev > worst) worst = dev;
  }
  json j = report_header();
  j["instances"] = instances;
  j["seed"] = seed;
  j["resolution"] = resolution;
  j["max_deviation"] = to_string(worst);
  j["bound"] = to_string(tol);
  emit(j, format);
  if (format == "text")
    std::cout << "oracle: max deviation " << to_string(worst) << " over " << instances
              << " instances (bound " << to_string(tol) << ")\n";
  return worst <= tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral slice-geometry certificates and numerical index estimation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string space_ref, mode = "strong-gl", format = "text", out, kind = "linf";
  std::vector<std::string> eps_args, parts;
  std::size_t samples = 2000, trials = 1000, instances = 100, repeat = 2;
  std::uint64_t seed = 1;
  long resolution = 10000;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Validate a space file or built-in space");
  validate_cmd->add_option("--space", space_ref, "Space file or built-in name")->required();
  add_format(validate_cmd);

  auto* check_cmd = app.add_subcommand("check", "Run a geometric condition certifier");
  check_cmd->add_option("--space", space_ref)->required();
  check_cmd->add_option("--mode", mode, "almost-cl | strong-gl | gl-eps | lush")
      ->check(CLI::IsMember({"almost-cl", "strong-gl", "gl-eps", "lush"}));
  check_cmd->add_option("--eps", eps_args, "Eps values as rationals, e.g. 1/8");
  add_format(check_cmd);

  auto* index_cmd = app.add_subcommand("index", "Sampled numerical index estimation");
  index_cmd->add_option("--space", space_ref)->required();
  index_cmd->add_option("--samples", samples);
  index_cmd->add_option("--seed", seed);
  add_format(index_cmd);

  auto* sum_cmd = app.add_subcommand("sum", "Construct l1/linf/C(K,.) sums");
  sum_cmd->add_option("--kind", kind, "l1 | linf | ck")->check(CLI::IsMember({"l1", "linf", "ck"}));
  sum_cmd->add_option("--space", parts, "Part space files or built-in names")->required();
  sum_cmd->add_option("--repeat", repeat, "Copies for kind=ck");
  sum_cmd->add_option("--out", out, "Write the constructed space file here");
  add_format(sum_cmd);

  auto* isom_cmd = app.add_subcommand("isom", "Symmetry group and isometry extension checks");
  isom_cmd->add_option("--space", space_ref)->required();
  isom_cmd->add_option("--trials", trials);
  isom_cmd->add_option("--seed", seed);
  add_format(isom_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Replay the grid brute-force distance oracle");
  oracle_cmd->add_option("--samples", instances, "Number of random instances");
  oracle_cmd->add_option("--seed", seed);
  oracle_cmd->add_option("--resolution", resolution, "Grid points per boundary segment");
  add_format(oracle_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(space_ref, format);
    if (app.got_subcommand(check_cmd)) return run_check(space_ref, mode, eps_args, format);
    if (app.got_subcommand(index_cmd)) return run_index(space_ref, samples, seed, format);
    if (app.got_subcommand(sum_cmd)) return run_sum(parts, kind, repeat, out, format);
    if (app.got_subcommand(isom_cmd)) return run_isom(space_ref, trials, seed, format);
    if (app.got_subcommand(oracle_cmd)) return run_oracle(instances, seed, resolution, format);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";  // includes byte position
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
