#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cwidth/arcbody.hpp"
#include "cwidth/small_lp.hpp"

namespace cwidth {

namespace {

Circle from_two(Vec2 a, Vec2 b) { return {0.5 * (a + b), 0.5 * norm(a - b)}; }

Circle from_three(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) < 1e-300) {
    Circle best = from_two(a, b);
    for (const Circle& cand : {from_two(a, c), from_two(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  const Vec2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + off, norm(off)};
}

bool outside(const Circle& c, Vec2 p) { return norm(p - c.center) > c.radius * (1.0 + 1e-14) + 1e-15; }

// Farthest boundary point of piece p from z.
Vec2 farthest_on_piece(const ArcPiece& p, Vec2 z) {
  if (p.radius <= 0.0) return p.center;
  const Vec2 d = p.center - z;
  const double t = std::atan2(d.y, d.x);
  if (p.phi_start + wrap_angle(t - p.phi_start) <= p.phi_end) return p.point(t);
  const Vec2 a = p.point(p.phi_start), b = p.point(p.phi_end);
  return norm(a - z) >= norm(b - z) ? a : b;
}

}  // namespace

Circle min_enclosing_circle(std::vector<Vec2> pts) {
  if (pts.empty()) throw Error(ErrorKind::InvalidParameter, "no points");
  std::mt19937_64 rng(0x5eedULL);
  std::shuffle(pts.begin(), pts.end(), rng);
  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!outside(c, pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (!outside(c, pts[j])) continue;
      c = from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (outside(c, pts[k])) c = from_three(pts[i], pts[j], pts[k]);
    }
  }
  return c;
}

Circle circumcircle(const ArcBody& k) {
  std::vector<Vec2> pts = boundary_points(k, 64);
  Circle c = min_enclosing_circle(pts);
  for (int round = 0; round < 100; ++round) {
    bool added = false;
    for (const auto& p : k.pieces()) {
      const Vec2 q = farthest_on_piece(p, c.center);
      if (norm(q - c.center) > c.radius + 1e-13) {
        pts.push_back(q);
        added = true;
      }
    }
    if (!added) return c;
    c = min_enclosing_circle(pts);
  }
  throw Error(ErrorKind::NumericalFailure, "circumcircle refinement did not settle");
}

Circle incircle(const ArcBody& k) {
  if (area(k) <= 1e-12 * std::max(1.0, k.extent() * k.extent()))
    throw Error(ErrorKind::DegenerateInput, "inradius of a zero-area body");

  const auto pts = boundary_points(k, 8);
  Vec2 z0;
  for (Vec2 p : pts) z0 += p;
  z0 = (1.0 / static_cast<double>(pts.size())) * z0;

  std::vector<double> thetas;
  const int base = 720;
  for (int i = 0; i < base; ++i) thetas.push_back(kTwoPi * i / base);
  for (const auto& p : k.pieces()) thetas.push_back(p.phi_start);

  SmallLp lp(3);
  auto add = [&](double t) {
    const double row[3] = {std::cos(t), std::sin(t), 1.0};
    lp.add_row(row, k.support(t));
  };
  for (double t : thetas) add(t);

  const double obj[3] = {0.0, 0.0, 1.0};
  for (int round = 0; round < 60; ++round) {
    double t0 = std::numeric_limits<double>::infinity();
    for (double t : thetas) t0 = std::min(t0, k.support(t) - dot(z0, unit(t)));
    const double x0[3] = {z0.x, z0.y, t0};
    const auto res = lp.maximize(obj, x0);
    const Vec2 z{res.x[0], res.x[1]};
    const double r = res.x[2];

    // Exact minimum of h(θ) − z·u(θ) on every piece.
    bool added = false;
    for (const auto& p : k.pieces()) {
      const Vec2 d = p.center - z;
      double tmin = p.phi_start;
      double vmin = p.support(p.phi_start) - dot(z, unit(p.phi_start));
      const double ve = p.support(p.phi_end) - dot(z, unit(p.phi_end));
      if (ve < vmin) vmin = ve, tmin = p.phi_end;
      const double topp = std::atan2(-d.y, -d.x);
      if (p.phi_start + wrap_angle(topp - p.phi_start) <= p.phi_end) {
        const double v = p.radius - norm(d);
        if (v < vmin) vmin = v, tmin = topp;
      }
      if (vmin < r - 1e-13) {
        thetas.push_back(tmin);
        add(tmin);
        added = true;
      }
    }
    if (!added) return {z, r};
    z0 = z;
  }
  throw Error(ErrorKind::NumericalFailure, "incircle refinement did not settle");
}

InOutRadii incircle_circumcircle(const ArcBody& k) { return {incircle(k), circumcircle(k)}; }

}  // namespace cwidth
