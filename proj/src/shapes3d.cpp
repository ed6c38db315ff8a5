#include <cmath>
#include <tuple>

#include "cwidth/solid3d.hpp"

namespace cwidth {

namespace {

// Orthonormal pair spanning the plane normal to a unit vector.
std::pair<Vec3, Vec3> frame(const Vec3& a) {
  const Vec3 t = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(a, t));
  return {e1, cross(a, e1)};
}

// Circle through the points at unit distance from both p and q: the edge arcs of
// the Reuleaux tetrahedron and the axis circles of the spindle patches.
struct AxisCircle {
  Vec3 center, axis, e1, e2;
  double radius, half;

  AxisCircle(const Vec3& p, const Vec3& q) {
    center = 0.5 * (p + q);
    axis = normalized(q - p);
    half = 0.5 * norm(q - p);
    radius = std::sqrt(1.0 - half * half);
    std::tie(e1, e2) = frame(axis);
  }
  double azimuth(const Vec3& x) const {
    const Vec3 d = x - center;
    return std::atan2(dot(d, e2), dot(d, e1));
  }
  Vec3 at(double phi) const { return center + radius * (std::cos(phi) * e1 + std::sin(phi) * e2); }
};

// Azimuth interval [start, start + span] of the short arc from a to b.
std::pair<double, double> arc_range(const AxisCircle& c, const Vec3& a, const Vec3& b) {
  const double pa = c.azimuth(a);
  double span = c.azimuth(b) - pa;
  while (span <= -kPi) span += kTwoPi;
  while (span > kPi) span -= kTwoPi;
  return span >= 0.0 ? std::make_pair(pa, span) : std::make_pair(pa + span, -span);
}

// Largest distance from x to the arc of c over the given azimuth interval.
double max_dist_to_arc(const AxisCircle& c, double start, double span, const Vec3& x) {
  const Vec3 d = x - c.center;
  const double z = dot(d, c.axis);
  const double rx = std::hypot(dot(d, c.e1), dot(d, c.e2));
  double cmin = 1.0;
  if (rx > 0.0) {
    const double px = c.azimuth(x);
    double rel = wrap_angle(px + kPi - start);
    if (rel <= span) {
      cmin = -1.0;
    } else {
      cmin = std::min(std::cos(start - px), std::cos(start + span - px));
    }
  }
  return std::sqrt(std::max(0.0, z * z + rx * rx + c.radius * c.radius - 2.0 * c.radius * rx * cmin));
}

struct Smoothed {
  AxisCircle circle;  // axis through the smoothed edge; the arc is the opposite edge
  double start, span;
};

std::vector<Smoothed> smoothed_edges(const std::array<Vec3, 4>& v, MeissnerKind kind) {
  const int vertex_edges[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  const int face_edges[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  const auto& edges = kind == MeissnerKind::VertexSmoothed ? vertex_edges : face_edges;
  std::vector<Smoothed> out;
  for (const auto& e : edges) {
    int o[2], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != e[0] && i != e[1]) o[k++] = i;
    AxisCircle c(v[e[0]], v[e[1]]);
    const auto [s, sp] = arc_range(c, v[o[0]], v[o[1]]);
    out.push_back({c, s, sp});
  }
  return out;
}

std::vector<Vec3> tetra_samples(int q, const std::vector<Smoothed>& smooth) {
  if (q < 1) throw Error(ErrorKind::InvalidParameter, "quality must be at least 1");
  const auto v = unit_tetrahedron();
  const double tol = 1e-12;
  auto inside = [&](const Vec3& x) {
    for (const Vec3& p : v)
      if (norm(x - p) > 1.0 + tol) return false;
    for (const Smoothed& s : smooth)
      if (max_dist_to_arc(s.circle, s.start, s.span, x) > 1.0 + tol) return false;
    return true;
  };
  std::vector<Vec3> pts(v.begin(), v.end());

  // Spherical patches: polar rings about the axis from each vertex to the opposite face.
  const double cap = std::acos(std::sqrt(2.0 / 3.0)) * 1.02;
  for (int i = 0; i < 4; ++i) {
    const Vec3 axis = normalized(-v[i]);
    const auto [e1, e2] = frame(axis);
    pts.push_back(v[i] + axis);
    const int rings = q;
    for (int r = 1; r <= rings; ++r) {
      const double beta = cap * r / rings;
      const int count = 6 * r;
      for (int k = 0; k < count; ++k) {
        const double phi = kTwoPi * k / count;
        const Vec3 u = std::cos(beta) * axis + std::sin(beta) * (std::cos(phi) * e1 + std::sin(phi) * e2);
        const Vec3 x = v[i] + u;
        if (inside(x)) pts.push_back(x);
      }
    }
  }

  // Edge arcs: the arc from v[j] to v[k] lies on the circle about the other two vertices.
  const int steps = 8 * q;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      int o[2], c = 0;
      for (int i = 0; i < 4; ++i)
        if (i != j && i != k) o[c++] = i;
      AxisCircle circ(v[o[0]], v[o[1]]);
      const auto [s, sp] = arc_range(circ, v[j], v[k]);
      for (int t = 1; t < steps; ++t) {
        const Vec3 x = circ.at(s + sp * t / steps);
        if (inside(x)) pts.push_back(x);
      }
    }

  // Spindle patches: for a center c on the opposite arc, the unit circle through the
  // smoothed edge's endpoints, taken on the far side of the axis.
  for (const Smoothed& sm : smooth) {
    const AxisCircle& c = sm.circle;
    const int na = 3 * q / 2 + 1, nz = 3 * q / 2 + 2;
    for (int a = 0; a <= na; ++a) {
      const double phi = sm.start + sm.span * a / na;
      const Vec3 radial = std::cos(phi) * c.e1 + std::sin(phi) * c.e2;
      const double psi0 = std::asin(c.half);
      for (int b = 1; b < nz; ++b) {
        const double psi = -psi0 + 2.0 * psi0 * b / nz;
        const Vec3 x = c.center + (c.radius - std::cos(psi)) * radial + std::sin(psi) * c.axis;
        if (inside(x)) pts.push_back(x);
      }
    }
  }
  return pts;
}

}  // namespace

std::array<Vec3, 4> unit_tetrahedron() {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  return {Vec3{s, s, s}, Vec3{s, -s, -s}, Vec3{-s, s, -s}, Vec3{-s, -s, s}};
}

TriMesh cube(double side) {
  if (!(side > 0.0)) throw Error(ErrorKind::InvalidParameter, "side must be positive");
  std::vector<Vec3> pts;
  const double h = 0.5 * side;
  for (int i = 0; i < 8; ++i) pts.push_back({i & 1 ? h : -h, i & 2 ? h : -h, i & 4 ? h : -h});
  return convex_hull3(pts);
}

TriMesh ball_mesh(double radius, int n) {
  if (!(radius > 0.0) || n < 4) throw Error(ErrorKind::InvalidParameter, "ball needs radius > 0 and n >= 4");
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    pts.push_back(radius * Vec3{r * std::cos(golden * i), r * std::sin(golden * i), z});
  }
  return convex_hull3(pts);
}

TriMesh reuleaux_tetrahedron(int quality) { return convex_hull3(tetra_samples(quality, {})); }

TriMesh meissner(MeissnerKind kind, int quality) {
  return convex_hull3(tetra_samples(quality, smoothed_edges(unit_tetrahedron(), kind)));
}

TriMesh rhombic_dodecahedron() {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(s * Vec3{i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
  for (double sg : {-2.0, 2.0}) {
    pts.push_back(s * Vec3{sg, 0, 0});
    pts.push_back(s * Vec3{0, sg, 0});
    pts.push_back(s * Vec3{0, 0, sg});
  }
  return convex_hull3(pts);
}

}  // namespace cwidth
