#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cwidth/kernels.hpp"

using namespace cwidth;
namespace ks = cwidth::kernels::serial;
namespace ko = cwidth::kernels::omp;

namespace {

std::vector<Vec3> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Vec3> p(n);
  for (Vec3& v : p) v = {g(rng), g(rng), g(rng)};
  return p;
}

}  // namespace

TEST_CASE("support_max agrees bit for bit") {
  const auto pts = random_points(3000, 1), dirs = random_points(500, 2);
  std::vector<double> a(dirs.size()), b(dirs.size());
  ks::support_max(pts, dirs, a);
  ko::support_max(pts, dirs, b);
  CHECK(a == b);
  for (std::size_t k = 0; k < dirs.size(); k += 37) {
    double h = -1e300;
    for (const Vec3& p : pts) h = std::max(h, dot(p, dirs[k]));
    CHECK(a[k] == h);
  }
}

TEST_CASE("pairwise_sums agrees bit for bit") {
  const auto a = random_points(120, 3), b = random_points(70, 4);
  std::vector<Vec3> s(a.size() * b.size()), o(a.size() * b.size());
  ks::pairwise_sums(a, b, 0.25, s);
  ko::pairwise_sums(a, b, 0.25, o);
  CHECK(s == o);
  CHECK(s[5 * b.size() + 9] == a[5] + 0.25 * b[9]);
}

TEST_CASE("farthest_update agrees and picks the lowest index on ties") {
  const auto pts = random_points(2000, 5), nrm = random_points(2000, 6);
  for (bool with_normals : {false, true}) {
    std::vector<double> d1(pts.size(), 1e300), d2(pts.size(), 1e300);
    std::span<const Vec3> n = with_normals ? std::span<const Vec3>(nrm) : std::span<const Vec3>();
    std::size_t c1 = 0, c2 = 0;
    for (int it = 0; it < 20; ++it) {
      c1 = ks::farthest_update(pts, n, c1, d1);
      c2 = ko::farthest_update(pts, n, c2, d2);
      CHECK(c1 == c2);
    }
    CHECK(d1 == d2);
  }
  const std::vector<Vec3> sym{{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}};
  std::vector<double> d(3, 1e300);
  CHECK(ko::farthest_update(sym, {}, 0, d) == 1);
  CHECK(d[0] == 0.0);
}
