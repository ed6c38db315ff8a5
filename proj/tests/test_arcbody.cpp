#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwidth/arcbody.hpp"
#include "cwidth/checks2d.hpp"
#include "cwidth/reuleaux.hpp"

using namespace cwidth;

namespace {

double shoelace(const std::vector<Vec2>& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
  return 0.5 * a;
}

double sampled_support(const std::vector<Vec2>& p, double theta) {
  double h = -1e300;
  for (const Vec2& q : p) h = std::max(h, dot(q, unit(theta)));
  return h;
}

ArcBody triangle_r() { return build_reuleaux(regular_spec(3)); }

}  // namespace

TEST_CASE("disk and polygon basics") {
  const ArcBody d = disk(0.7, {0.3, -0.2});
  CHECK(area(d) == doctest::Approx(kPi * 0.49).epsilon(1e-14));
  CHECK(perimeter(d) == doctest::Approx(kTwoPi * 0.7).epsilon(1e-14));
  CHECK(support(d, 0.0) == doctest::Approx(1.0));

  const std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const ArcBody s = polygon(sq);
  CHECK(area(s) == doctest::Approx(1.0));
  CHECK(perimeter(s) == doctest::Approx(4.0));
  CHECK(width(s, 0.0) == doctest::Approx(1.0));
  CHECK(width(s, kPi / 4) == doctest::Approx(std::sqrt(2.0)));

  const std::vector<Vec2> seg{{0, 0}, {2, 0}};
  CHECK(area(polygon(seg)) == doctest::Approx(0.0));
  CHECK(perimeter(polygon(seg)) == doctest::Approx(4.0));
}

TEST_CASE("constructor errors") {
  CHECK_THROWS_AS(disk(0.0), Error);
  CHECK_THROWS_AS(disk(-1.0), Error);
  const std::vector<Vec2> none;
  CHECK_THROWS_AS(polygon(none), Error);
}

TEST_CASE("area and perimeter match a dense boundary sample") {
  for (const ArcBody& k : {triangle_r(), build_reuleaux(random_spec(7, 3)), disk(0.5), random_polygon(9, 12)}) {
    const auto pts = boundary_points(k, 2000);
    CHECK(std::abs(shoelace(pts) - area(k)) < 1e-5);
    double per = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) per += norm(pts[(i + 1) % pts.size()] - pts[i]);
    CHECK(std::abs(per - perimeter(k)) < 1e-5);
  }
}

TEST_CASE("support function matches the sampled boundary") {
  const ArcBody k = build_reuleaux(random_spec(5, 11));
  const auto pts = boundary_points(k, 4000);
  for (int i = 0; i < 97; ++i) {
    const double t = kTwoPi * i / 97.0;
    CHECK(std::abs(sampled_support(pts, t) - support(k, t)) < 1e-6);
    CHECK(dot(k.support_point(t), unit(t)) == doctest::Approx(support(k, t)).epsilon(1e-12));
  }
}

TEST_CASE("Reuleaux triangle") {
  const ArcBody r = triangle_r();
  CHECK(std::abs(area(r) - (kPi - kSqrt3) / 2.0) <= 1e-12);
  CHECK(perimeter(r) == doctest::Approx(kPi).epsilon(1e-14));
  for (int i = 0; i < 50; ++i) CHECK(width(r, 0.13 * i) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(mixed_area(r, reflect_origin(r)) == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-13));
  const InOutRadii rr = incircle_circumcircle(r);
  CHECK(rr.out.radius == doctest::Approx(kSqrt3 / 3.0).epsilon(1e-9));
  CHECK(rr.in.radius == doctest::Approx(1.0 - kSqrt3 / 3.0).epsilon(1e-9));
}

TEST_CASE("hull of R and -R is the unit-width hexagon") {
  const ArcBody r = triangle_r();
  const ArcBody s = hull_of_union(r, reflect_origin(r));
  CHECK(area(s) == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-12));
  CHECK(perimeter(s) == doctest::Approx(2.0 * kSqrt3).epsilon(1e-12));
  const ArcBody h = regular_hexagon();
  CHECK(area(h) == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-12));
  CHECK(width(h, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("Minkowski sum adds support functions") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  const ArcBody a = build_reuleaux(random_spec(9, 2));
  const ArcBody b = translate(random_polygon(4, 7), {0.2, 0.1});
  const ArcBody s = minkowski_sum(a, b);
  for (int i = 0; i < 200; ++i) {
    const double t = u(rng);
    CHECK(support(s, t) == doctest::Approx(support(a, t) + support(b, t)).epsilon(1e-12));
  }
}

TEST_CASE("mixed area: two evaluations agree and polarize area") {
  for (int i = 0; i < 20; ++i) {
    const ArcBody k = random_polygon(100 + i, 5 + i);
    const ArcBody l = i % 2 ? build_reuleaux(random_spec(5, i)) : disk(0.3, {0.1, 0.4});
    const double by_sum = mixed_area_by_sum(k, l), by_pair = mixed_area_by_pairing(k, l);
    CHECK(std::abs(by_sum - by_pair) < 1e-10);
    CHECK(std::abs(mixed_area(k, l) - mixed_area(l, k)) < 1e-10);
    CHECK(std::abs(mixed_area(k, k) - area(k)) < 1e-12);
    // A(K + tL) = A(K) + 2t A(K,L) + t² A(L)
    const double t = 0.37;
    const double lhs = area(minkowski_sum(k, scale(l, t)));
    CHECK(std::abs(lhs - (area(k) + 2 * t * by_pair + t * t * area(l))) < 1e-10);
  }
}

TEST_CASE("mixed area of a segment and a disk") {
  const std::vector<Vec2> seg{{0, 0}, {1, 0}};
  CHECK(mixed_area(polygon(seg), disk(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mixed_area(disk(1.0), disk(0.5)) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("transforms") {
  const ArcBody k = build_reuleaux(random_spec(7, 8));
  CHECK(area(rotate(k, 0.7)) == doctest::Approx(area(k)).epsilon(1e-13));
  CHECK(area(translate(k, {3, -2})) == doctest::Approx(area(k)).epsilon(1e-13));
  CHECK(area(scale(k, 2.5)) == doctest::Approx(6.25 * area(k)).epsilon(1e-13));
  CHECK(area(reflect_origin(k)) == doctest::Approx(area(k)).epsilon(1e-13));
  CHECK(support(reflect_origin(k), 0.3) == doctest::Approx(support(k, 0.3 + kPi)).epsilon(1e-13));
  CHECK(support(rotate(k, 0.5), 1.0) == doctest::Approx(support(k, 0.5)).epsilon(1e-13));
  CHECK_THROWS_AS(scale(k, 0.0), Error);
}

TEST_CASE("inclusion and support excess") {
  const ArcBody r = triangle_r();
  CHECK(inclusion(r, disk(kSqrt3 / 3.0)));
  CHECK(inclusion(disk(1.0 - kSqrt3 / 3.0), r));
  CHECK_FALSE(inclusion(disk(0.5), r));
  CHECK(max_support_excess(disk(0.5), disk(0.3)) == doctest::Approx(0.2));
  CHECK(max_support_excess(r, regular_hexagon()) <= 1e-12);
}

TEST_CASE("enclosing circles") {
  const std::vector<Vec2> sq{{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
  const ArcBody s = polygon(sq);
  CHECK(circumcircle(s).radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(incircle(s).radius == doctest::Approx(0.5).epsilon(1e-9));
  const std::vector<Vec2> seg{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(incircle(polygon(seg)), Error);
  const Circle mec = min_enclosing_circle({{0, 0}, {2, 0}, {1, 0.1}});
  CHECK(mec.radius == doctest::Approx(1.0));
}

TEST_CASE("piece table") {
  const std::string csv = piece_table_csv(triangle_r());
  CHECK(csv.rfind("phi_start,phi_end,cx,cy,r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}
