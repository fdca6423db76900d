#include <catch2/catch_amalgamated.hpp>

#include "normgeo/builtin.hpp"
#include "normgeo/certify.hpp"
#include "normgeo/sampling.hpp"
#include "oracle.hpp"

using namespace normgeo;

namespace {

// Recomputes a certificate's witness cell through the public distance API.
Rational replay(const PolySpace& s, const Certificate& c) {
  REQUIRE_FALSE(c.witnesses.empty());
  const Witness& w = c.witnesses.front();
  const Functional& f = s.facets[w.facet];
  const Vector& y = s.vertices[w.vertex];
  switch (c.condition) {
    case Condition::StrongGL:
      return dist_to_face(s, y, f) + dist_to_face(s, y, negate(f));
    case Condition::GLatEps:
      return dist_to_slice(s, y, f, *c.eps) + dist_to_slice(s, y, negate(f), *c.eps);
    case Condition::LushAtEps:
      return dist_to_aco_slice(s, y, f, *c.eps);
    case Condition::AlmostCL: {
      std::vector<Vector> hull;
      for (int j : s.incidence[w.facet]) hull.push_back(s.vertices[j]);
      std::size_t base = hull.size();
      for (std::size_t j = 0; j < base; ++j) hull.push_back(negate(hull[j]));
      return dist_to_hull(s, y, hull);
    }
    default:
      FAIL("unexpected condition");
      return 0;
  }
}

}  // namespace

TEST_CASE("almost-CL verdicts on the standard polygons") {
  auto diamond = spaces::diamond(2);
  auto square = spaces::square(2);
  auto hex = spaces::hexagon();

  auto cd = almost_cl_check(diamond);
  CHECK(cd.verdict == Verdict::certified);
  CHECK(*cd.bound == 0);

  auto cs = almost_cl_check(square);
  CHECK(cs.verdict == Verdict::certified);

  auto ch = almost_cl_check(hex);
  CHECK(ch.verdict == Verdict::failed);
  CHECK(*ch.bound > 0);
  CHECK(replay(hex, ch) == ch.witnesses.front().value);
}

TEST_CASE("hexagon witness for the almost-CL failure") {
  // For the facet through (1,0) and (1/2,1), the vertex (-1/2,1) lies
  // outside conv(F u -F).
  auto hex = spaces::hexagon();
  int fi = hex.facet_index({rat(1), rat(1, 2)});
  REQUIRE(fi >= 0);
  std::vector<Vector> hull;
  for (int j : hex.incidence[fi]) hull.push_back(hex.vertices[j]);
  std::size_t base = hull.size();
  for (std::size_t j = 0; j < base; ++j) hull.push_back(negate(hull[j]));
  CHECK(dist_to_hull(hex, {rat(-1, 2), rat(1)}, hull) > 0);
}

TEST_CASE("strong GL certificates") {
  for (const char* name : {"hexagon", "square2", "diamond2"}) {
    auto s = *spaces::by_name(name);
    auto c = strong_gl_certify(s);
    INFO(name);
    CHECK(c.verdict == Verdict::certified);
    CHECK(*c.bound == 2);
    CHECK(replay(s, c) == c.witnesses.front().value);
  }
}

TEST_CASE("per-eps GL certificates") {
  auto hex = spaces::hexagon();
  auto c = gl_certify_eps(hex, rat(1, 2));
  CHECK(c.verdict == Verdict::certified);
  CHECK(*c.bound <= 2);
  CHECK(replay(hex, c) == c.witnesses.front().value);

  CHECK(gl_certify_eps(spaces::square(2), rat(1, 4)).verdict == Verdict::certified);
  CHECK_THROWS_AS(gl_certify_eps(hex, rat(2)), std::invalid_argument);
}

TEST_CASE("octagon is not certified by the sufficient conditions") {
  auto oct = spaces::octagon();
  auto acl = almost_cl_check(oct);
  CHECK(acl.verdict == Verdict::failed);
  auto gl = strong_gl_certify(oct);
  CHECK(gl.verdict == Verdict::inconclusive);
  CHECK(*gl.bound == rat(7, 3));
  CHECK(replay(oct, gl) == gl.witnesses.front().value);
}

TEST_CASE("strong certificate dominates every eps on the grid") {
  for (const char* name : {"hexagon", "square2", "diamond2", "hex_linf3"}) {
    auto s = *spaces::by_name(name);
    auto strong = strong_gl_certify(s);
    INFO(name);
    REQUIRE(strong.verdict == Verdict::certified);
    for (const auto& eps : default_eps_grid()) {
      auto c = gl_certify_eps(s, eps);
      CHECK(c.verdict == Verdict::certified);
      CHECK(*c.bound <= *strong.bound);
    }
  }
}

TEST_CASE("almost-CL certified implies strong GL certified") {
  for (const auto& s : spaces::all()) {
    if (s.vertices.size() > 20) continue;  // keep the suite quick
    if (almost_cl_check(s).verdict == Verdict::certified) {
      INFO(s.label);
      CHECK(strong_gl_certify(s).verdict == Verdict::certified);
    }
  }
}

TEST_CASE("lush certificates") {
  CHECK(lush_check_eps(spaces::diamond(2), rat(1, 2)).verdict == Verdict::certified);
  CHECK(lush_check_eps(spaces::square(2), rat(1, 2)).verdict == Verdict::certified);

  // No asserted ground truth for the hexagon at eps = 1/8; the requirement
  // is agreement with the independent grid oracle on every cell.
  auto hex = spaces::hexagon();
  Rational eps = rat(1, 8);
  auto cert = lush_check_eps(hex, eps);
  const long res = 400;
  const Rational tol(2, res);
  bool all_below = true;
  for (std::size_t fi = 0; fi < hex.facets.size(); ++fi)
    for (std::size_t vj = 0; vj < hex.vertices.size(); ++vj) {
      Rational lp = dist_to_aco_slice(hex, hex.vertices[vj], hex.facets[fi], eps);
      Rational grid = oracle::dist_to_aco_slice(hex, hex.vertices[vj], hex.facets[fi], eps, res);
      CHECK(lp <= grid);
      CHECK(grid <= lp + tol);
      if (!(lp < eps)) all_below = false;
    }
  CHECK((cert.verdict == Verdict::certified) == all_below);
}

TEST_CASE("ball points obey a certified per-eps GL bound") {
  auto hex = spaces::hexagon();
  Rational eps = rat(1, 2);
  auto cert = gl_certify_eps(hex, eps);
  REQUIRE(cert.verdict == Verdict::certified);
  Rng rng(31337);
  for (int i = 0; i < 100; ++i) {
    Vector y = rng.ball_point(hex);
    for (const auto& f : hex.facets) {
      Rational sum = dist_to_slice(hex, y, f, eps) + dist_to_slice(hex, y, negate(f), eps);
      CHECK(sum < 2 + eps);
    }
  }
}

TEST_CASE("certificates are deterministic") {
  auto hex = spaces::hexagon();
  CHECK(strong_gl_certify(hex).to_json().dump() == strong_gl_certify(hex).to_json().dump());
  CHECK(almost_cl_check(hex).to_json().dump() == almost_cl_check(hex).to_json().dump());
  CHECK(gl_certify_eps(hex, rat(1, 4)).to_json().dump() ==
        gl_certify_eps(hex, rat(1, 4)).to_json().dump());
  CHECK(lush_check_eps(hex, rat(1, 4)).to_json().dump() ==
        lush_check_eps(hex, rat(1, 4)).to_json().dump());
}
