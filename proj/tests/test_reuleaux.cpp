#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cwidth/reuleaux.hpp"

using namespace cwidth;

namespace {

// Area as skeleton polygon plus one circular segment per arc.
double decomposed_area(const ArcBody& p) {
  std::vector<Vec2> verts;
  double segments = 0.0;
  for (const ArcPiece& pc : p.pieces()) {
    if (pc.radius == 0.0) {
      if (verts.empty() || norm(verts.back() - pc.center) > 1e-12) verts.push_back(pc.center);
    } else {
      const double t = pc.span();
      segments += 0.5 * (t - std::sin(t));
    }
  }
  if (norm(verts.front() - verts.back()) < 1e-12) verts.pop_back();
  double a = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) a += cross(verts[i], verts[(i + 1) % verts.size()]);
  return 0.5 * a + segments;
}

}  // namespace

TEST_CASE("regular Reuleaux polygons") {
  for (int n = 3; n <= 15; n += 2) {
    const ArcBody p = build_reuleaux(regular_spec(n));
    CHECK(is_reuleaux(p));
    CHECK(perimeter(p) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(std::abs(area(p) - decomposed_area(p)) < 1e-12);
    CHECK(circumcircle(p).radius == doctest::Approx(0.5 / std::cos(kPi / (2 * n))).epsilon(1e-9));
  }
  CHECK(area(build_reuleaux(regular_spec(5))) > area(build_reuleaux(regular_spec(3))));
}

TEST_CASE("random specs are valid, close and are deterministic") {
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + 2 * (i % 6);
    const ReuleauxSpec s = random_spec(n, i);
    CHECK_NOTHROW(validate_spec(s));
    CHECK(s.n() == n);
    CHECK(std::accumulate(s.angles.begin(), s.angles.end(), 0.0) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(norm(closure_residual(s.angles)) < 1e-12);
    CHECK(random_spec(n, i).angles == s.angles);
    const ArcBody p = build_reuleaux(s);
    CHECK(std::abs(area(p) - decomposed_area(p)) < 1e-12);
    CHECK(std::abs(layout_area(s.angles) - area(p)) < 1e-12);
    for (int k = 0; k < 64; ++k) CHECK(width(p, 0.1 * k) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(random_spec(7, 1).angles != random_spec(7, 2).angles);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate_spec({{kPi / 2, kPi / 2}}), Error);
  CHECK_THROWS_AS(validate_spec({{kPi / 3, kPi / 3, kPi / 4}}), Error);
  CHECK_THROWS_AS(validate_spec({{kPi / 2, kPi / 4, kPi / 4}}), Error);
  CHECK_THROWS_AS(validate_spec({{-0.1, kPi / 3 + 0.05, kPi / 3 + 0.05}}), Error);
  CHECK_THROWS_AS(regular_spec(4), Error);
  CHECK_NOTHROW(validate_spec({{1.0471975512, 1.0471975512, 1.0471975512}}));
}

TEST_CASE("non-closing angle vectors are rejected") {
  // Sum π and inside the box, but the arcs do not close up.
  const ReuleauxSpec s{{kPi / 3, kPi / 3, kPi / 3 - 0.2, 0.1, 0.1}};
  CHECK(norm(closure_residual(s.angles)) > 1e-6);
  CHECK_THROWS_AS(build_reuleaux(s), Error);
}

TEST_CASE("collapsed pentagon equals the triangle") {
  const ReuleauxSpec s{{kPi / 3, 0.0, kPi / 3, 0.0, kPi / 3}};
  CHECK(norm(closure_residual(s.angles)) < 1e-12);
  CHECK(area(build_reuleaux(s)) == doctest::Approx((kPi - kSqrt3) / 2).epsilon(1e-12));
}

TEST_CASE("skeleton and tangent polygon") {
  const ArcBody r = build_reuleaux(regular_spec(3));
  CHECK(area(skeleton(r)) == doctest::Approx(kSqrt3 / 4).epsilon(1e-12));
  CHECK(area(tangent_polygon(r)) == doctest::Approx(kSqrt3 / 2).epsilon(1e-12));
  CHECK_FALSE(is_reuleaux(disk(0.5)));
  CHECK_FALSE(is_reuleaux(skeleton(r)));
  for (int i = 0; i < 20; ++i) {
    const ArcBody p = build_reuleaux(random_spec(3 + 2 * (i % 5), 40 + i));
    const ArcBody s = skeleton(p), c = tangent_polygon(p);
    CHECK(inclusion(s, p));
    CHECK(inclusion(p, c));
    const double a = area(s);
    CHECK(a >= kSqrt3 / 4 - 1e-9);
    CHECK(a < kPi / 4);
  }
}

TEST_CASE("sandwich samples lie between skeleton and tangent polygon") {
  const ArcBody p = build_reuleaux(random_spec(9, 77));
  const ArcBody s = skeleton(p), c = tangent_polygon(p);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ArcBody q = sandwich_sample(p, seed);
    CHECK(inclusion(s, q));
    CHECK(inclusion(q, c));
    const auto pts = sample_in_polygon(c, seed, 30);
    CHECK(pts.size() == 30);
    for (const Vec2& x : pts) CHECK(inclusion(point_body(x), c));
  }
}

TEST_CASE("circular segment area") {
  CHECK(circular_segment_area(0.0) == 0.0);
  CHECK(circular_segment_area(kPi / 3) == doctest::Approx((kPi / 3 - kSqrt3 / 2) / 2));
}
