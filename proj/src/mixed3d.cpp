#include <cmath>
#include <limits>

#include "cwidth/kernels.hpp"
#include "cwidth/solid3d.hpp"

namespace cwidth {

TriMesh minkowski_sum3(const TriMesh& a, const TriMesh& b) {
  const double pairs = static_cast<double>(a.vertices.size()) * static_cast<double>(b.vertices.size());
  if (pairs > 1e6) throw Error(ErrorKind::ResourceLimit, "minkowski_sum3 needs at most 10^6 vertex pairs; decimate first");
  std::vector<Vec3> sums(a.vertices.size() * b.vertices.size());
  kernels::omp::pairwise_sums(a.vertices, b.vertices, 1.0, sums);
  return convex_hull3(sums);
}

std::vector<Vec3> decimate(std::span<const Vec3> points, std::span<const Vec3> normals, int max_points) {
  if (max_points < 4) throw Error(ErrorKind::InvalidParameter, "max_points must be at least 4");
  if (!normals.empty() && normals.size() != points.size())
    throw Error(ErrorKind::InvalidParameter, "one normal per point is required");
  if (points.size() <= static_cast<std::size_t>(max_points)) return {points.begin(), points.end()};
  std::size_t cur = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].x > points[cur].x) cur = i;
  std::vector<double> dist2(points.size(), std::numeric_limits<double>::infinity());
  std::vector<Vec3> out;
  out.reserve(max_points);
  while (static_cast<int>(out.size()) < max_points) {
    out.push_back(points[cur]);
    cur = kernels::omp::farthest_update(points, normals, cur, dist2);
  }
  return out;
}

std::vector<Vec3> vertex_normals(const TriMesh& m) {
  std::vector<Vec3> n(m.vertices.size());
  for (const auto& f : m.faces) {
    const Vec3 c = cross(m.vertices[f[1]] - m.vertices[f[0]], m.vertices[f[2]] - m.vertices[f[0]]);
    for (int i : f) n[i] += c;
  }
  for (Vec3& v : n) {
    const double len = norm(v);
    if (len > 0.0) v = (1.0 / len) * v;
  }
  return n;
}

TriMesh decimated(const TriMesh& m, int max_points) {
  if (m.vertices.size() <= static_cast<std::size_t>(max_points)) return m;
  return convex_hull3(decimate(m.vertices, vertex_normals(m), max_points));
}

MixedVolumes mixed_volumes_fit(const TriMesh& k, const TriMesh& l) {
  const TriMesh kd = decimated(k), ld = decimated(l);
  std::vector<Vec3> sums(kd.vertices.size() * ld.vertices.size());
  const double ts[4] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  double v[4];
  v[0] = volume(kd);
  for (int i = 1; i < 4; ++i) {
    kernels::omp::pairwise_sums(kd.vertices, ld.vertices, ts[i], sums);
    v[i] = volume(convex_hull3(sums));
  }
  // Newton divided differences, expanded into monomial coefficients c[p] of t^p.
  double dd[4] = {v[0], v[1], v[2], v[3]};
  for (int j = 1; j < 4; ++j)
    for (int i = 3; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - j]);
  double c[4] = {dd[3], 0.0, 0.0, 0.0};
  for (int i = 2; i >= 0; --i) {
    for (int p = 3; p >= 1; --p) c[p] = c[p - 1] - ts[i] * c[p];
    c[0] = dd[i] - ts[i] * c[0];
  }

  MixedVolumes out;
  out.v_k = c[0];
  out.v_kkl = c[1] / 3.0;
  out.v_kll = c[2] / 3.0;
  out.v_l = c[3];
  const double vl = volume(ld);
  if (std::abs(c[3] - vl) > 0.01 * vl)
    throw Error(ErrorKind::NumericalFailure, "cubic fit disagrees with V(L): " + fmt10(c[3]) + " vs " + fmt10(vl));
  return out;
}

double chakerian_bound(double r) {
  if (!(r > 0.0 && r < 1.5)) throw Error(ErrorKind::InvalidParameter, "r must lie in (0, 3/2)");
  return 2.0 * r * kPi / (3.0 * (3.0 - 2.0 * r));
}

double meissner_volume_exact() {
  return kPi * (2.0 / 3.0 - std::sqrt(3.0) / 4.0 * std::acos(1.0 / 3.0));
}

double meissner_inradius_exact() {
  const double v = meissner_volume_exact();
  return 3.0 * v / (2.0 * kPi / 3.0 + 2.0 * v);
}

}  // namespace cwidth
