#include <cmath>
#include <random>
#include <unordered_map>

#include "cwidth/kernels.hpp"
#include "cwidth/small_lp.hpp"
#include "cwidth/solid3d.hpp"

namespace cwidth {

const char* to_string(MeissnerKind kind) {
  return kind == MeissnerKind::VertexSmoothed ? "vertex" : "face";
}

namespace {

Vec3 face_cross(const TriMesh& m, const std::array<int, 3>& f) {
  const Vec3& a = m.vertices[f[0]];
  return cross(m.vertices[f[1]] - a, m.vertices[f[2]] - a);
}

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

void check_mesh(const TriMesh& m) {
  if (m.faces.size() < 4) throw Error(ErrorKind::InvalidBody, "mesh has fewer than 4 faces");
  std::unordered_map<std::uint64_t, int> directed;
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) {
      if (f[e] < 0 || f[e] >= static_cast<int>(m.vertices.size()))
        throw Error(ErrorKind::InvalidBody, "face index out of range");
      if (++directed[edge_key(f[e], f[(e + 1) % 3])] > 1) throw Error(ErrorKind::InvalidBody, "edge used twice in one direction");
    }
  for (const auto& [k, c] : directed) {
    const int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
    if (!directed.count(edge_key(b, a))) throw Error(ErrorKind::InvalidBody, "mesh is not watertight");
  }
  const long long v = static_cast<long long>(m.vertices.size());
  const long long e = static_cast<long long>(directed.size()) / 2;
  const long long f = static_cast<long long>(m.faces.size());
  if (v - e + f != 2) throw Error(ErrorKind::InvalidBody, "Euler characteristic is not 2");
  const double tol = 1e-7 * std::max(1.0, diameter_bound(m.vertices));
  std::vector<Vec3> normals;
  std::vector<double> offsets;
  for (const auto& fc : m.faces) {
    const Vec3 c = face_cross(m, fc);
    const double len = norm(c);
    if (len == 0.0) continue;
    normals.push_back((1.0 / len) * c);
    offsets.push_back(dot(normals.back(), m.vertices[fc[0]]));
  }
  std::vector<double> h(normals.size());
  kernels::omp::support_max(m.vertices, normals, h);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] - offsets[i] > tol) throw Error(ErrorKind::InvalidBody, "mesh is not convex");
}

double volume(const TriMesh& m) {
  double v = 0.0;
  for (const auto& f : m.faces) v += dot(m.vertices[f[0]], cross(m.vertices[f[1]], m.vertices[f[2]]));
  v /= 6.0;
  if (v < 0.0) throw Error(ErrorKind::InvalidBody, "mesh is inverted (negative volume)");
  return v;
}

double area(const TriMesh& m) {
  double a = 0.0;
  for (const auto& f : m.faces) a += 0.5 * norm(face_cross(m, f));
  return a;
}

double mean_width(const TriMesh& m) {
  std::unordered_map<std::uint64_t, int> owner;
  for (std::size_t i = 0; i < m.faces.size(); ++i)
    for (int e = 0; e < 3; ++e) owner[edge_key(m.faces[i][e], m.faces[i][(e + 1) % 3])] = static_cast<int>(i);
  double s = 0.0;
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    const auto& f = m.faces[i];
    for (int e = 0; e < 3; ++e) {
      const int a = f[e], b = f[(e + 1) % 3];
      if (a > b) continue;
      auto it = owner.find(edge_key(b, a));
      if (it == owner.end()) throw Error(ErrorKind::InvalidBody, "mesh is not watertight");
      const Vec3 n1 = face_cross(m, f), n2 = face_cross(m, m.faces[it->second]);
      const double angle = std::atan2(norm(cross(n1, n2)), dot(n1, n2));
      s += norm(m.vertices[b] - m.vertices[a]) * angle;
    }
  }
  return s / (4.0 * kPi);
}

double mesh_support(const TriMesh& m, const Vec3& dir) {
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec3& p : m.vertices) h = std::max(h, dot(p, dir));
  return h;
}

double mesh_width(const TriMesh& m, const Vec3& dir) {
  const Vec3 u = normalized(dir);
  return mesh_support(m, u) + mesh_support(m, -u);
}

double inradius3(const TriMesh& m) {
  if (m.vertices.empty()) throw Error(ErrorKind::InvalidBody, "empty mesh");
  Vec3 c{};
  for (const Vec3& p : m.vertices) c += p;
  c = (1.0 / static_cast<double>(m.vertices.size())) * c;
  SmallLp lp(4);
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& f : m.faces) {
    const Vec3 x = face_cross(m, f);
    const double len = norm(x);
    if (len < 1e-300) continue;
    const Vec3 n = (1.0 / len) * x;
    const double d = dot(n, m.vertices[f[0]]);
    const double row[4] = {n.x, n.y, n.z, 1.0};
    lp.add_row(row, d);
    slack = std::min(slack, d - dot(n, c));
  }
  if (!(slack > 0.0)) throw Error(ErrorKind::InvalidBody, "vertex centroid is not interior");
  const double obj[4] = {0.0, 0.0, 0.0, 1.0};
  const double x0[4] = {c.x, c.y, c.z, 0.5 * slack};
  return lp.maximize(obj, x0).value;
}

WidthStats width_stats(const TriMesh& m, int n_dirs, std::uint64_t seed) {
  if (n_dirs < 1) throw Error(ErrorKind::InvalidParameter, "need at least one direction");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Vec3> dirs;
  dirs.reserve(2 * n_dirs);
  while (static_cast<int>(dirs.size()) < n_dirs) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    if (norm(v) > 1e-6) dirs.push_back(normalized(v));
  }
  for (int i = 0; i < n_dirs; ++i) dirs.push_back(-dirs[i]);
  std::vector<double> h(dirs.size());
  kernels::omp::support_max(m.vertices, dirs, h);
  WidthStats s{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < n_dirs; ++i) {
    const double w = h[i] + h[i + n_dirs];
    s.min = std::min(s.min, w);
    s.max = std::max(s.max, w);
  }
  return s;
}

VerificationReport width_report(const TriMesh& m, int n_dirs, std::uint64_t seed, double target, double tol) {
  const WidthStats s = width_stats(m, n_dirs, seed);
  VerificationReport r("width");
  r.add("width.max_deviation", std::max(s.max - target, target - s.min), 0.0, tol, CheckKind::Le);
  r.add("width.min", s.min, target, tol);
  r.add("width.max", s.max, target, tol);
  return r;
}

TriMesh translate(const TriMesh& m, const Vec3& v) {
  TriMesh o = m;
  for (Vec3& p : o.vertices) p += v;
  return o;
}

TriMesh scale(const TriMesh& m, double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidParameter, "scale must be positive");
  TriMesh o = m;
  for (Vec3& p : o.vertices) p = s * p;
  return o;
}

TriMesh reflect_origin(const TriMesh& m) {
  TriMesh o = m;
  for (Vec3& p : o.vertices) p = -p;
  // Point reflection reverses orientation.
  for (auto& f : o.faces) std::swap(f[1], f[2]);
  return o;
}

void write_obj(const TriMesh& m, std::ostream& out) {
  for (const Vec3& p : m.vertices) out << "v " << fmt10(p.x) << ' ' << fmt10(p.y) << ' ' << fmt10(p.z) << '\n';
  for (const auto& f : m.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace cwidth
