#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "normgeo/builtin.hpp"
#include "normgeo/isomlab.hpp"
#include "normgeo/sums.hpp"

using namespace normgeo;

namespace {

OperatorMatrix diag2(Rational a, Rational b) {
  return OperatorMatrix{{{a, rat(0)}, {rat(0), b}}};
}

bool contains(const std::vector<OperatorMatrix>& g, const OperatorMatrix& m) {
  return std::find(g.begin(), g.end(), m) != g.end();
}

}  // namespace

TEST_CASE("symmetry groups of the standard polygons") {
  auto gs = symmetry_group(spaces::square(2));
  CHECK(gs.size() == 8);  // dihedral: 4 rotations, 4 reflections

  // the hexagon is a linear image of the regular hexagon, so its group is
  // the full dihedral group of order 12
  auto gh = symmetry_group(spaces::hexagon());
  REQUIRE(gh.size() == 12);
  CHECK(contains(gh, diag2(rat(1), rat(1))));
  CHECK(contains(gh, diag2(rat(-1), rat(-1))));
  CHECK(contains(gh, diag2(rat(-1), rat(1))));
  CHECK(contains(gh, diag2(rat(1), rat(-1))));

  auto gd = symmetry_group(spaces::diamond(2));
  CHECK(gd.size() == 8);
}

TEST_CASE("every group contains plus and minus identity and is closed") {
  for (const char* name : {"segment", "hexagon", "octagon", "square2", "diamond2"}) {
    auto s = *spaces::by_name(name);
    auto g = symmetry_group(s);
    INFO(name);
    auto id = OperatorMatrix::identity(s.dim);
    OperatorMatrix neg = id;
    for (auto& row : neg.entries)
      for (auto& e : row) e = -e;
    CHECK(contains(g, id));
    CHECK(contains(g, neg));
    for (const auto& a : g) {
      auto inv = invert(a);
      REQUIRE(inv);
      CHECK(contains(g, *inv));
      for (const auto& b : g) CHECK(contains(g, a.compose(b)));
    }
  }
}

TEST_CASE("symmetry group guardrail") {
  CHECK_THROWS_AS(symmetry_group(ck_power(spaces::hexagon(), 2)), size_error);
}

TEST_CASE("group elements satisfy the extension inequality with equality") {
  for (const char* name : {"hexagon", "square2"}) {
    auto s = *spaces::by_name(name);
    for (const auto& m : symmetry_group(s)) {
      auto t = linear_isometry(s, m);
      auto report = check_mup_inequality(t, 200, 11);
      INFO(name);
      CHECK(report.violations == 0);
      CHECK(report.equalities == report.trials);
    }
  }
}

TEST_CASE("homogeneous extension of a linear symmetry is the matrix action") {
  auto hex = spaces::hexagon();
  auto g = symmetry_group(hex);
  Rng rng(321);
  for (const auto& m : g) {
    auto t = linear_isometry(hex, m);
    CHECK(extend_homogeneous(t, {rat(0), rat(0)}) == Vector{rat(0), rat(0)});
    for (int i = 0; i < 50; ++i) {
      Vector x = rng.vector(2);
      CHECK(extend_homogeneous(t, x) == m.apply(x));
    }
    auto lin = linearity_check(t, 100, 5);
    CHECK(lin.violations == 0);
    CHECK(lin.equalities == lin.trials);
  }
}

TEST_CASE("vertex-map admission accepts permutations induced by symmetries") {
  auto sq = spaces::square(2);
  for (const auto& m : symmetry_group(sq)) {
    std::vector<int> perm(sq.vertices.size());
    for (std::size_t j = 0; j < sq.vertices.size(); ++j) {
      Vector img = m.apply(sq.vertices[j]);
      auto it = std::lower_bound(sq.vertices.begin(), sq.vertices.end(), img, detail::lex_less);
      REQUIRE(it != sq.vertices.end());
      perm[j] = static_cast<int>(it - sq.vertices.begin());
    }
    auto t = admit_vertex_map(sq, perm);
    REQUIRE(t);
    Rng rng(77);
    for (int i = 0; i < 30; ++i) {
      Vector x = rng.sphere_point(sq);
      CHECK(t->apply(x) == m.apply(x));
    }
  }
}

TEST_CASE("vertex-map admission rejects non-isometric permutations") {
  auto sq = spaces::square(2);
  // swap two adjacent corners, fix the rest: distances collapse
  std::vector<int> perm(sq.vertices.size());
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = static_cast<int>(j);
  int a = -1, b = -1;
  for (std::size_t i = 0; i < sq.vertices.size() && b < 0; ++i)
    for (std::size_t j = i + 1; j < sq.vertices.size(); ++j)
      if (norm(sq, sub(sq.vertices[i], sq.vertices[j])) == 2 &&
          sq.vertices[i] != negate(sq.vertices[j])) {
        a = static_cast<int>(i);
        b = static_cast<int>(j);
        break;
      }
  REQUIRE(a >= 0);
  std::swap(perm[a], perm[b]);
  std::string why;
  CHECK_FALSE(admit_vertex_map(sq, perm, &why));
  CHECK_FALSE(why.empty());

  // malformed inputs
  CHECK_FALSE(admit_vertex_map(sq, {0, 1, 2}));
  CHECK_FALSE(admit_vertex_map(sq, {0, 0, 1, 2}));
}

TEST_CASE("vertex-map extension stays on the sphere and rejects interior points") {
  auto hex = spaces::hexagon();
  std::vector<int> perm(hex.vertices.size());
  // the negation map as a pure vertex bijection
  for (std::size_t j = 0; j < perm.size(); ++j) {
    auto it = std::lower_bound(hex.vertices.begin(), hex.vertices.end(),
                               negate(hex.vertices[j]), detail::lex_less);
    perm[j] = static_cast<int>(it - hex.vertices.begin());
  }
  auto t = admit_vertex_map(hex, perm);
  REQUIRE(t);
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    Vector x = rng.sphere_point(hex);
    Vector y = t->apply(x);
    CHECK(norm(hex, y) == 1);
    CHECK(y == negate(x));
  }
  CHECK_THROWS_AS(t->apply(Vector{rat(0), rat(0)}), std::invalid_argument);
}
