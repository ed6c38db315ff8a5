#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwidth/optim2d.hpp"

using namespace cwidth;

namespace {

const double kTarget = kSqrt3 / 2.0;

bool feasible(const SupportVector& h, double tol = 1e-9) {
  return min_convexity(h.h) >= -tol && box_violation(h.h) <= tol;
}

double rms(const SupportVector& a, const SupportVector& b) {
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += (a.h[i] - b.h[i]) * (a.h[i] - b.h[i]);
  return std::sqrt(s / a.n());
}

double max_diff(const SupportVector& a, const SupportVector& b) {
  double m = 0.0;
  for (int i = 0; i < a.n(); ++i) m = std::max(m, std::abs(a.h[i] - b.h[i]));
  return m;
}

ArcBody rectangle(double w, double l) {
  const std::vector<Vec2> p{{-l / 2, -w / 2}, {l / 2, -w / 2}, {l / 2, w / 2}, {-l / 2, w / 2}};
  return polygon(p);
}

SupportVector perturbed_hexagon(int n, std::uint64_t seed, double sigma) {
  SupportVector h = discretize(regular_hexagon(), n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sigma);
  for (double& v : h.h) v += g(rng);
  return h;
}

}  // namespace

TEST_CASE("objective on known bodies") {
  const SupportVector d = discretize(disk(0.5), 360);
  for (double v : d.h) CHECK(v == doctest::Approx(0.5));
  CHECK(objective(d) == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(std::abs(objective(discretize(regular_hexagon(), 720)) - kTarget) < 2e-5);
  CHECK(std::abs(objective(discretize(rectangle(1, 1), 720)) - 1.0) < 2e-3);
  const double l = 2.0 * kSqrt3 / 3.0;
  double prev = 1e300;
  for (double w : {0.1, 0.01, 0.001}) {
    const double gap = std::abs(objective_raw(discretize(rectangle(w, l), 720).h) - l);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 2e-3);
}

TEST_CASE("objective converges at second order") {
  for (const ArcBody& k : {regular_hexagon(), rectangle(1, 1), build_reuleaux(regular_spec(3))}) {
    const double exact = 0.5 * perimeter(k) - area(k);
    const double e1 = std::abs(objective_raw(discretize(k, 120).h) - exact);
    const double e2 = std::abs(objective_raw(discretize(k, 240).h) - exact);
    if (e1 < 1e-14) continue;
    CHECK(std::log2(e1 / e2) >= 1.8);
  }
}

TEST_CASE("gradient matches finite differences") {
  const SupportVector h = perturbed_hexagon(48, 3, 0.01);
  const std::vector<double> g = objective_gradient(h.h);
  const double step = 1e-6;
  for (int i = 0; i < h.n(); i += 5) {
    std::vector<double> a = h.h, b = h.h;
    a[i] += step;
    b[i] -= step;
    const double fd = (objective_raw(a) - objective_raw(b)) / (2 * step);
    CHECK(fd == doctest::Approx(h.delta() * g[i]).epsilon(1e-6));
  }
}

TEST_CASE("objective rejects non-convex vectors") {
  SupportVector h = discretize(disk(0.5), 64);
  h.h[10] = 0.2;
  CHECK(min_convexity(h.h) < 0);
  CHECK_THROWS_AS(objective(h), Error);
  CHECK_NOTHROW(objective_raw(h.h));
}

TEST_CASE("projection returns feasible inputs unchanged") {
  const SupportVector h = discretize(regular_hexagon(), 96);
  REQUIRE(feasible(h));
  CHECK(project_feasible(h).h == h.h);
}

TEST_CASE("projection of a constant above the box") {
  SupportVector h;
  h.h.assign(64, 1.0);
  const SupportVector p = project_feasible(h);
  for (double v : p.h) CHECK(v == doctest::Approx(kSqrt3 / 3).epsilon(1e-9));
}

TEST_CASE("projection agrees with the row-action reference") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SupportVector y = perturbed_hexagon(16, seed, 0.05);
    const SupportVector p = project_feasible(y), r = project_feasible_reference(y);
    CHECK(feasible(p));
    CHECK(max_diff(p, r) < 1e-6);
  }
}

TEST_CASE("projection of a perturbed hexagon stays close") {
  const SupportVector hex = discretize(regular_hexagon(), 720);
  const SupportVector y = perturbed_hexagon(720, 11, 0.01);
  ProjectionInfo info;
  const SupportVector p = project_feasible(y, &info);
  CHECK(feasible(p));
  CHECK(rms(p, y) < 0.02);
  CHECK(rms(p, hex) < 0.02);
  CHECK(rms(p, y) <= rms(hex, y) + 1e-12);
  CHECK(info.iterations > 0);
}

TEST_CASE("snap produces feasible vectors below the input") {
  const SupportVector y = perturbed_hexagon(200, 4, 0.02);
  const SupportVector s = snap_feasible(y.h);
  CHECK(feasible(s, 1e-12));
}

TEST_CASE("random starts are feasible and seeded") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SupportVector h = random_feasible_start(128, seed);
    CHECK(feasible(h));
    CHECK(random_feasible_start(128, seed).h == h.h);
  }
}

TEST_CASE("relaxed optimizer on a coarse grid") {
  RelaxedOptions opt;
  opt.n = 32;
  opt.starts = 4;
  const RelaxedResult r = optimize_relaxed(opt);
  CHECK(std::abs(r.value - kTarget) <= 0.03 * kTarget);
  CHECK(feasible(r.best));
  CHECK(r.start_values.size() == 6);
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    if (r.trace[i].start == r.trace[i - 1].start) CHECK(r.trace[i].objective >= r.trace[i - 1].objective - 1e-12);

  opt.parallel = false;
  const RelaxedResult s = optimize_relaxed(opt);
  CHECK(s.value == r.value);
  CHECK(s.best.h == r.best.h);
  CHECK(s.best_start == r.best_start);
}

TEST_CASE("relaxed optimizer from the hexagon at full resolution") {
  RelaxedOptions opt;
  opt.n = 720;
  opt.starts = 0;
  opt.warm_disk = false;
  const RelaxedResult r = optimize_relaxed(opt);
  CHECK(std::abs(r.value - kTarget) <= 2e-4);
}

TEST_CASE("symmetric relaxed optimizer") {
  RelaxedOptions opt;
  opt.n = 64;
  opt.starts = 2;
  opt.symmetric = true;
  const RelaxedResult r = optimize_relaxed(opt);
  for (int i = 0; i < 32; ++i) CHECK(r.best.h[i] == doctest::Approx(r.best.h[i + 32]).epsilon(1e-9));
  CHECK(r.value > 0.8);
}

TEST_CASE("angle optimizer finds the Reuleaux triangle") {
  const AnglesResult a = optimize_angles(3, 4, 1);
  const AnglesResult b = optimize_angles(3, 4, 99);
  CHECK(a.area == doctest::Approx((kPi - kSqrt3) / 2).epsilon(1e-9));
  CHECK(b.area == doctest::Approx(a.area).epsilon(1e-9));
  const AnglesResult c = optimize_angles(5, 6, 2);
  CHECK(c.area == doctest::Approx((kPi - kSqrt3) / 2).epsilon(1e-6));
  CHECK_NOTHROW(validate_spec(c.spec));
  CHECK_THROWS_AS(optimize_angles(4, 2, 1), Error);
}
