#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "cwidth/solid3d.hpp"

namespace cwidth {

namespace {

struct Face {
  std::array<int, 3> v;
  std::array<int, 3> adj;  // face across edge v[i] → v[(i+1)%3]
  Vec3 n;
  double d = 0.0;
  bool alive = true;
  std::vector<int> outside;
  int visit = -1;
};

class Quickhull {
 public:
  Quickhull(std::span<const Vec3> pts, double eps) : p_(pts), eps_(eps) {}

  TriMesh run() {
    simplex();
    for (int f = 0; f < 4; ++f) pending_.push_back(f);
    while (!pending_.empty()) {
      const int f = pending_.back();
      if (!faces_[f].alive || faces_[f].outside.empty()) {
        pending_.pop_back();
        continue;
      }
      int apex = faces_[f].outside.front();
      double best = dist(faces_[f], apex);
      for (int q : faces_[f].outside)
        if (double dq = dist(faces_[f], q); dq > best) {
          best = dq;
          apex = q;
        }
      add_point(f, apex);
    }
    return extract();
  }

 private:
  std::span<const Vec3> p_;
  double eps_;
  std::vector<Face> faces_;
  int stamp_ = 0;
  std::vector<int> pending_;

  double dist(const Face& f, int i) const { return dot(f.n, p_[i]) - f.d; }

  int make_face(int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    f.adj = {-1, -1, -1};
    const Vec3 n = cross(p_[b] - p_[a], p_[c] - p_[a]);
    const double len = norm(n);
    f.n = len > 0.0 ? (1.0 / len) * n : Vec3{};
    f.d = dot(f.n, p_[a]);
    faces_.push_back(std::move(f));
    return static_cast<int>(faces_.size()) - 1;
  }

  void simplex() {
    const int n = static_cast<int>(p_.size());
    if (n < 4) throw Error(ErrorKind::DegenerateInput, "hull needs at least 4 points");
    int i0 = 0, i1 = 0;
    for (int i = 0; i < n; ++i) {
      if (p_[i].x < p_[i0].x) i0 = i;
      if (p_[i].x > p_[i1].x) i1 = i;
    }
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vec3 d = p_[i] - p_[i0];
      if (dot(d, d) > best) {
        best = dot(d, d);
        i1 = i;
      }
    }
    if (best <= eps_ * eps_) throw Error(ErrorKind::DegenerateInput, "points coincide");
    const Vec3 axis = normalized(p_[i1] - p_[i0]);
    int i2 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const Vec3 d = p_[i] - p_[i0];
      const double r = norm(d - dot(d, axis) * axis);
      if (r > best) {
        best = r;
        i2 = i;
      }
    }
    if (i2 < 0) throw Error(ErrorKind::DegenerateInput, "points are collinear");
    const Vec3 pn = normalized(cross(p_[i1] - p_[i0], p_[i2] - p_[i0]));
    int i3 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const double h = std::abs(dot(pn, p_[i] - p_[i0]));
      if (h > best) {
        best = h;
        i3 = i;
      }
    }
    if (i3 < 0) throw Error(ErrorKind::DegenerateInput, "points are coplanar");
    if (dot(pn, p_[i3] - p_[i0]) > 0.0) std::swap(i1, i2);

    // Base (i0, i1, i2) now faces away from i3.
    const int f0 = make_face(i0, i1, i2);
    const int f1 = make_face(i0, i3, i1);
    const int f2 = make_face(i1, i3, i2);
    const int f3 = make_face(i2, i3, i0);
    link_all({f0, f1, f2, f3});

    for (int i = 0; i < n; ++i) {
      if (i == i0 || i == i1 || i == i2 || i == i3) continue;
      assign(i, {f0, f1, f2, f3});
    }
  }

  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  void link_all(const std::vector<int>& ids) {
    std::unordered_map<std::uint64_t, std::pair<int, int>> edges;
    for (int f : ids)
      for (int e = 0; e < 3; ++e) edges[key(faces_[f].v[e], faces_[f].v[(e + 1) % 3])] = {f, e};
    for (int f : ids)
      for (int e = 0; e < 3; ++e) {
        auto it = edges.find(key(faces_[f].v[(e + 1) % 3], faces_[f].v[e]));
        if (it != edges.end()) faces_[f].adj[e] = it->second.first;
      }
  }

  void assign(int i, const std::vector<int>& cands) {
    int best = -1;
    double bd = eps_;
    for (int f : cands) {
      const double d = dist(faces_[f], i);
      if (d > bd) {
        bd = d;
        best = f;
      }
    }
    if (best >= 0) faces_[best].outside.push_back(i);
  }

  void add_point(int start, int apex) {
    ++stamp_;
    std::vector<int> visible{start};
    faces_[start].visit = stamp_;
    for (std::size_t k = 0; k < visible.size(); ++k)
      for (int nb : faces_[visible[k]].adj)
        if (faces_[nb].visit != stamp_ && dist(faces_[nb], apex) > eps_) {
          faces_[nb].visit = stamp_;
          visible.push_back(nb);
        }

    // Horizon edges (a → b) as seen from the visible side, with the hidden face behind.
    std::unordered_map<int, std::pair<int, int>> next;  // a -> (b, hidden face)
    for (int f : visible)
      for (int e = 0; e < 3; ++e) {
        const int nb = faces_[f].adj[e];
        if (faces_[nb].visit == stamp_) continue;
        const int a = faces_[f].v[e];
        if (!next.emplace(a, std::make_pair(faces_[f].v[(e + 1) % 3], nb)).second) {
          // Pinched visible region: drop the point rather than build a broken surface.
          faces_[start].outside.erase(std::find(faces_[start].outside.begin(), faces_[start].outside.end(), apex));
          return;
        }
      }

    std::vector<int> loop;
    int a = next.begin()->first;
    for (std::size_t guard = 0; guard <= next.size(); ++guard) {
      loop.push_back(a);
      a = next.at(a).first;
      if (a == loop.front()) break;
    }
    if (loop.size() != next.size()) {
      faces_[start].outside.erase(std::find(faces_[start].outside.begin(), faces_[start].outside.end(), apex));
      return;
    }

    std::vector<int> orphans;
    for (int f : visible) {
      faces_[f].alive = false;
      for (int q : faces_[f].outside)
        if (q != apex) orphans.push_back(q);
      faces_[f].outside.clear();
      faces_[f].outside.shrink_to_fit();
    }

    const std::size_t m = loop.size();
    std::vector<int> created(m);
    for (std::size_t k = 0; k < m; ++k) created[k] = make_face(loop[k], next.at(loop[k]).first, apex);
    for (std::size_t k = 0; k < m; ++k) {
      Face& f = faces_[created[k]];
      const int hidden = next.at(loop[k]).second;
      f.adj = {hidden, created[(k + 1) % m], created[(k + m - 1) % m]};
      Face& h = faces_[hidden];
      for (int e = 0; e < 3; ++e)
        if (h.v[e] == f.v[1] && h.v[(e + 1) % 3] == f.v[0]) h.adj[e] = created[k];
    }
    for (int q : orphans) assign(q, created);
    pending_.insert(pending_.end(), created.begin(), created.end());
  }

  TriMesh extract() const {
    TriMesh out;
    std::vector<int> remap(p_.size(), -1);
    for (const Face& f : faces_) {
      if (!f.alive) continue;
      std::array<int, 3> t{};
      for (int e = 0; e < 3; ++e) {
        int& r = remap[f.v[e]];
        if (r < 0) {
          r = static_cast<int>(out.vertices.size());
          out.vertices.push_back(p_[f.v[e]]);
        }
        t[e] = r;
      }
      out.faces.push_back(t);
    }
    return out;
  }
};

}  // namespace

double diameter_bound(std::span<const Vec3> points) {
  if (points.empty()) return 0.0;
  Vec3 lo = points[0], hi = points[0];
  for (const Vec3& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return norm(hi - lo);
}

TriMesh convex_hull3(std::span<const Vec3> points) {
  for (const Vec3& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw Error(ErrorKind::InvalidParameter, "non-finite point");
  std::vector<Vec3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double eps = 1e-12 * std::max(1.0, diameter_bound(pts));
  return Quickhull(pts, eps).run();
}

}  // namespace cwidth
