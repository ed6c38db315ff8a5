#include "cwidth/arcbody.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cwidth/small_lp.hpp"

namespace cwidth {

namespace {

// Breakpoints closer than this are merged when two partitions are overlaid.
constexpr double kBreakMerge = 1e-12;
constexpr double kRootSnap = 1e-10;

struct Cell {
  double a = 0.0;
  double b = 0.0;
  std::size_t ik = 0;
  std::size_t il = 0;
};

// Common refinement of the normal partitions of two bodies.
std::vector<Cell> refine(const ArcBody& k, const ArcBody& l) {
  std::vector<double> br;
  br.reserve(k.pieces().size() + l.pieces().size() + 1);
  for (const auto& p : k.pieces()) br.push_back(p.phi_start);
  for (const auto& p : l.pieces()) br.push_back(p.phi_start);
  std::sort(br.begin(), br.end());
  std::vector<double> cuts;
  for (double t : br)
    if (cuts.empty() || t - cuts.back() > kBreakMerge) cuts.push_back(t);
  if (kTwoPi - cuts.back() <= kBreakMerge) cuts.pop_back();
  cuts.push_back(kTwoPi);

  std::vector<Cell> cells;
  cells.reserve(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    cells.push_back({cuts[i], cuts[i + 1], k.piece_index(mid), l.piece_index(mid)});
  }
  return cells;
}

// ∫_a^b u(θ) dθ
Vec2 int_u(double a, double b) { return {std::sin(b) - std::sin(a), std::cos(a) - std::cos(b)}; }

// Whether angle t (any representative) falls in [a, b] ⊂ [0, 2π].
bool angle_in(double t, double a, double b) {
  const double w = a + wrap_angle(t - a);
  return w <= b;
}

std::vector<ArcPiece> transformed(const ArcBody& k, double dphi, double rot, double s, Vec2 shift) {
  std::vector<ArcPiece> out;
  out.reserve(k.pieces().size());
  for (const auto& p : k.pieces())
    out.push_back({p.phi_start + dphi, p.phi_end + dphi, s * rotate(p.center, rot) + shift, s * p.radius});
  return out;
}

}  // namespace

ArcBody::ArcBody(std::vector<ArcPiece> in) {
  if (in.empty()) throw Error(ErrorKind::InvalidBody, "body has no pieces");
  std::vector<ArcPiece> ps;
  ps.reserve(in.size() + 1);
  for (auto p : in) {
    if (!std::isfinite(p.phi_start) || !std::isfinite(p.phi_end) || !std::isfinite(p.radius) ||
        !std::isfinite(p.center.x) || !std::isfinite(p.center.y))
      throw Error(ErrorKind::InvalidBody, "non-finite piece data");
    const double span = p.span();
    if (span < -1e-12) throw Error(ErrorKind::InvalidBody, "piece with negative span");
    if (p.radius < -1e-12) throw Error(ErrorKind::InvalidBody, "piece with negative radius");
    p.radius = std::max(p.radius, 0.0);
    if (span <= 0.0) continue;
    if (span >= kTwoPi - 1e-12) {
      ps.push_back({0.0, kTwoPi, p.center, p.radius});
      continue;
    }
    const double s = wrap_angle(p.phi_start);
    const double e = s + span;
    if (e > kTwoPi + 1e-13) {
      ps.push_back({s, kTwoPi, p.center, p.radius});
      ps.push_back({0.0, e - kTwoPi, p.center, p.radius});
    } else {
      ps.push_back({s, std::min(e, kTwoPi), p.center, p.radius});
    }
  }
  if (ps.empty()) throw Error(ErrorKind::InvalidBody, "body has no pieces of positive span");
  std::sort(ps.begin(), ps.end(), [](const ArcPiece& a, const ArcPiece& b) { return a.phi_start < b.phi_start; });

  double total = 0.0;
  for (const auto& p : ps) total += p.span();
  if (std::abs(total - kTwoPi) > 1e-9) throw Error(ErrorKind::InvalidBody, "normal intervals do not cover the circle");
  if (ps.front().phi_start > 1e-9) throw Error(ErrorKind::InvalidBody, "normal intervals leave a gap at 0");
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    if (std::abs(ps[i].phi_end - ps[i + 1].phi_start) > 1e-9)
      throw Error(ErrorKind::InvalidBody, "normal intervals are not contiguous");
  ps.front().phi_start = 0.0;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) ps[i].phi_end = ps[i + 1].phi_start;
  ps.back().phi_end = kTwoPi;

  double ext = 0.0;
  for (const auto& p : ps) ext = std::max(ext, std::max(std::abs(p.center.x), std::abs(p.center.y)) + p.radius);
  const double same_tol = 1e-13 * std::max(1.0, ext);
  for (const auto& p : ps) {
    if (!pieces_.empty()) {
      auto& q = pieces_.back();
      if (norm(q.center - p.center) <= same_tol && std::abs(q.radius - p.radius) <= same_tol) {
        q.phi_end = p.phi_end;
        continue;
      }
    }
    pieces_.push_back(p);
  }

  const double tol = kGeomTol * std::max(1.0, ext);
  const std::size_t n = pieces_.size();
  atoms_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = pieces_[i];
    const auto& prev = pieces_[(i + n - 1) % n];
    const double phi = cur.phi_start;
    const Vec2 gap = cur.point(phi) - prev.point(phi);
    const double along = dot(gap, tangent(phi));
    const double perp = dot(gap, unit(phi));
    if (std::abs(perp) > tol)
      throw Error(ErrorKind::InvalidBody, "support discontinuity " + fmt10(perp) + " at junction " + fmt10(phi));
    if (along < -tol) throw Error(ErrorKind::InvalidBody, "negative atom " + fmt10(along) + " at " + fmt10(phi));
    atoms_[i] = std::max(along, 0.0);
  }

  Vec2 pos = pieces_[0].point(0.0);
  const Vec2 start = pos;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pieces_[i];
    pos += p.point(p.phi_end) - p.point(p.phi_start);
    const std::size_t j = (i + 1) % n;
    pos += atoms_[j] * tangent(pieces_[j].phi_start);
  }
  if (norm(pos - start) > tol) throw Error(ErrorKind::InvalidBody, "boundary does not close");
}

std::size_t ArcBody::piece_index(double theta) const {
  if (pieces_.empty()) throw Error(ErrorKind::InvalidBody, "empty body");
  const double t = wrap_angle(theta);
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double v, const ArcPiece& p) { return v < p.phi_start; });
  return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - pieces_.begin()) - 1));
}

double ArcBody::support(double theta) const { return piece_at(theta).support(theta); }

Vec2 ArcBody::support_point(double theta) const { return piece_at(theta).point(theta); }

double ArcBody::extent() const {
  double ext = 0.0;
  for (const auto& p : pieces_) ext = std::max(ext, std::max(std::abs(p.center.x), std::abs(p.center.y)) + p.radius);
  return ext;
}

ArcBody disk(double r, Vec2 center) {
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidParameter, "disk radius must be positive");
  return ArcBody({{0.0, kTwoPi, center, r}});
}

ArcBody point_body(Vec2 p) { return ArcBody({{0.0, kTwoPi, p, 0.0}}); }

ArcBody polygon(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) throw Error(ErrorKind::DegenerateInput, "polygon needs two distinct points");

  // Andrew's monotone chain, counterclockwise, collinear points dropped.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  const std::size_t m = hull.size();

  std::vector<double> normal(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 e = hull[(i + 1) % m] - hull[i];
    normal[i] = std::atan2(-e.x, e.y);
  }
  std::vector<ArcPiece> pieces;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    double span = wrap_angle(normal[j] - normal[i]);
    if (m == 2) span = kPi;
    pieces.push_back({normal[i], normal[i] + span, hull[j], 0.0});
  }
  return ArcBody(std::move(pieces));
}

ArcBody regular_hexagon(double width) {
  std::vector<Vec2> v;
  const double rc = width / kSqrt3;
  for (int i = 0; i < 6; ++i) v.push_back(rc * unit(kPi / 6.0 + i * kPi / 3.0));
  return polygon(v);
}

double support(const ArcBody& k, double theta) { return k.support(theta); }

double width(const ArcBody& k, double theta) { return k.support(theta) + k.support(theta + kPi); }

double area(const ArcBody& k) {
  double sum = 0.0;
  const auto& ps = k.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& p = ps[i];
    sum += p.radius * (dot(p.center, int_u(p.phi_start, p.phi_end)) + p.radius * p.span());
    sum += p.support(p.phi_start) * k.atoms()[i];
  }
  return std::max(0.0, 0.5 * sum);
}

double perimeter(const ArcBody& k) {
  double sum = 0.0;
  for (const auto& p : k.pieces()) sum += p.radius * p.span();
  for (double a : k.atoms()) sum += a;
  return sum;
}

ArcBody reflect_origin(const ArcBody& k) { return ArcBody(transformed(k, kPi, kPi, 1.0, {})); }

ArcBody translate(const ArcBody& k, Vec2 v) { return ArcBody(transformed(k, 0.0, 0.0, 1.0, v)); }

ArcBody rotate(const ArcBody& k, double alpha) { return ArcBody(transformed(k, alpha, alpha, 1.0, {})); }

ArcBody scale(const ArcBody& k, double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidParameter, "scale factor must be positive");
  return ArcBody(transformed(k, 0.0, 0.0, s, {}));
}

ArcBody minkowski_sum(const ArcBody& k, const ArcBody& l) {
  std::vector<ArcPiece> out;
  for (const auto& c : refine(k, l)) {
    const auto& pk = k.pieces()[c.ik];
    const auto& pl = l.pieces()[c.il];
    out.push_back({c.a, c.b, pk.center + pl.center, pk.radius + pl.radius});
  }
  return ArcBody(std::move(out));
}

double mixed_area_by_sum(const ArcBody& k, const ArcBody& l) {
  return 0.5 * (area(minkowski_sum(k, l)) - area(k) - area(l));
}

double mixed_area_by_pairing(const ArcBody& k, const ArcBody& l) {
  double sum = 0.0;
  for (const auto& c : refine(k, l)) {
    const auto& pk = k.pieces()[c.ik];
    const auto& pl = l.pieces()[c.il];
    if (pl.radius > 0.0) sum += pl.radius * (dot(pk.center, int_u(c.a, c.b)) + pk.radius * (c.b - c.a));
  }
  for (std::size_t j = 0; j < l.pieces().size(); ++j)
    if (l.atoms()[j] > 0.0) sum += k.support(l.pieces()[j].phi_start) * l.atoms()[j];
  return 0.5 * sum;
}

double mixed_area(const ArcBody& k, const ArcBody& l) {
  const double pairing = mixed_area_by_pairing(k, l);
  const double by_sum = mixed_area_by_sum(k, l);
  const double scale2 = std::max(1.0, k.extent() * l.extent());
  if (std::abs(pairing - by_sum) > 1e-8 * scale2)
    throw Error(ErrorKind::InternalConsistency,
                "mixed area paths disagree: " + fmt10(pairing) + " vs " + fmt10(by_sum));
  return pairing;
}

ArcBody hull_of_union(const ArcBody& k, const ArcBody& l) {
  std::vector<ArcPiece> out;
  for (const auto& c : refine(k, l)) {
    const auto& pk = k.pieces()[c.ik];
    const auto& pl = l.pieces()[c.il];
    // h_K − h_L = c0 + A cos θ + B sin θ on this cell.
    const double c0 = pk.radius - pl.radius;
    const Vec2 ab = pk.center - pl.center;
    const double rho = norm(ab);
    std::vector<double> cuts{c.a};
    if (rho - std::abs(c0) > 1e-12) {
      const double psi = std::atan2(ab.y, ab.x);
      const double delta = std::acos(std::clamp(-c0 / rho, -1.0, 1.0));
      for (double root : {psi - delta, psi + delta}) {
        const double t = c.a + wrap_angle(root - c.a);
        // Roots hugging a cell end are snapped onto it; the midpoint test on a
        // sliver would otherwise pick a side from rounding noise.
        if (t > c.a + kRootSnap && t < c.b - kRootSnap) cuts.push_back(t);
      }
      std::sort(cuts.begin(), cuts.end());
    }
    cuts.push_back(c.b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] <= cuts[i]) continue;
      const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      const double d = c0 + dot(ab, unit(mid));
      const ArcPiece& src = d >= 0.0 ? pk : pl;
      out.push_back({cuts[i], cuts[i + 1], src.center, src.radius});
    }
  }
  return ArcBody(std::move(out));
}

double max_support_excess(const ArcBody& k, const ArcBody& l) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : refine(k, l)) {
    const auto& pk = k.pieces()[c.ik];
    const auto& pl = l.pieces()[c.il];
    const double c0 = pk.radius - pl.radius;
    const Vec2 ab = pk.center - pl.center;
    auto d = [&](double t) { return c0 + dot(ab, unit(t)); };
    best = std::max({best, d(c.a), d(c.b)});
    const double rho = norm(ab);
    if (rho > 0.0 && angle_in(std::atan2(ab.y, ab.x), c.a, c.b)) best = std::max(best, c0 + rho);
  }
  return best;
}

bool inclusion(const ArcBody& k, const ArcBody& l, double tol) { return max_support_excess(k, l) <= tol; }

std::vector<Vec2> boundary_points(const ArcBody& k, int per_arc) {
  std::vector<Vec2> pts;
  for (const auto& p : k.pieces()) {
    if (p.radius <= 0.0) {
      pts.push_back(p.center);
      continue;
    }
    const int m = std::max(2, per_arc);
    for (int i = 0; i < m; ++i) pts.push_back(p.point(p.phi_start + p.span() * i / (m - 1)));
  }
  return pts;
}

std::string piece_table_csv(const ArcBody& k) {
  std::ostringstream os;
  os << "phi_start,phi_end,cx,cy,r\n";
  for (const auto& p : k.pieces())
    os << fmt10(p.phi_start) << ',' << fmt10(p.phi_end) << ',' << fmt10(p.center.x) << ',' << fmt10(p.center.y)
       << ',' << fmt10(p.radius) << '\n';
  return os.str();
}

}  // namespace cwidth
