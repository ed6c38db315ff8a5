#include "cwidth/reuleaux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cwidth {

namespace {

constexpr double kThird = kPi / 3.0;

bool in_box(std::span<const double> th) {
  return std::all_of(th.begin(), th.end(), [](double t) { return t >= 0.0 && t <= kThird; });
}

// Closure and angle-sum residual F = (Cx, Cy, Σθ − π) with its Jacobian (3×n, row-major).
void closure_system(std::span<const double> th, double f[3], std::vector<double>& jac) {
  const int n = static_cast<int>(th.size());
  const int half = (n + 1) / 2;
  jac.assign(3 * n, 0.0);
  std::vector<double> coeff(n, 0.0);  // φ as a combination of the angles
  double phi = 0.0;
  f[0] = f[1] = 0.0;
  f[2] = -kPi;
  for (int k = 0; k < n; ++k) {
    const double a = phi, b = phi + th[k];
    const Vec2 ua = unit(a), ub = unit(b), ta = tangent(a), tb = tangent(b);
    f[0] += ub.x - ua.x;
    f[1] += ub.y - ua.y;
    for (int j = 0; j < n; ++j) {
      const double db = coeff[j] + (j == k ? 1.0 : 0.0);
      jac[0 * n + j] += tb.x * db - ta.x * coeff[j];
      jac[1 * n + j] += tb.y * db - ta.y * coeff[j];
    }
    coeff[k] += 1.0;
    const int v = (k + half) % n;
    phi = b + th[v];
    coeff[v] += 1.0;
    f[2] += th[k];
  }
  for (int j = 0; j < n; ++j) jac[2 * n + j] = 1.0;
}

bool solve3(double m[3][3], double r[3]) {
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int i = c + 1; i < 3; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    if (std::abs(m[p][c]) < 1e-300) return false;
    std::swap(m[c], m[p]);
    std::swap(r[c], r[p]);
    for (int i = c + 1; i < 3; ++i) {
      const double f = m[i][c] / m[c][c];
      for (int k = c; k < 3; ++k) m[i][k] -= f * m[c][k];
      r[i] -= f * r[c];
    }
  }
  for (int i = 2; i >= 0; --i) {
    for (int k = i + 1; k < 3; ++k) r[i] -= m[i][k] * r[k];
    r[i] /= m[i][i];
  }
  return true;
}

// Minimum-norm Newton onto {closure = 0, Σθ = π}. Returns false if it stalls.
bool project_closure(std::vector<double>& th) {
  const int n = static_cast<int>(th.size());
  std::vector<double> jac;
  for (int it = 0; it < 60; ++it) {
    double f[3];
    closure_system(th, f, jac);
    if (std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]) < 1e-15) return true;
    double jjt[3][3] = {};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int j = 0; j < n; ++j) jjt[a][b] += jac[a * n + j] * jac[b * n + j];
    double y[3] = {f[0], f[1], f[2]};
    if (!solve3(jjt, y)) return false;
    for (int j = 0; j < n; ++j) th[j] -= jac[0 * n + j] * y[0] + jac[1 * n + j] * y[1] + jac[2 * n + j] * y[2];
  }
  double f[3];
  closure_system(th, f, jac);
  return std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]) < 1e-13;
}

bool is_unit_arc(const ArcPiece& p) { return std::abs(p.radius - 1.0) <= 1e-9; }

}  // namespace

void validate_spec(const ReuleauxSpec& spec) {
  const int n = spec.n();
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidParameter, "Reuleaux spec needs an odd number >= 3 of angles");
  double sum = 0.0;
  for (double t : spec.angles) {
    if (!std::isfinite(t) || t < -1e-9 || t > kThird + 1e-9)
      throw Error(ErrorKind::InvalidParameter, "Reuleaux angle " + fmt10(t) + " outside [0, pi/3]");
    sum += t;
  }
  if (std::abs(sum - kPi) > 1e-9 * n)
    throw Error(ErrorKind::InvalidParameter, "Reuleaux angles sum to " + fmt10(sum) + ", not pi");
}

ReuleauxSpec regular_spec(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidParameter, "n must be odd and >= 3");
  return {std::vector<double>(n, kPi / n)};
}

std::vector<ArcPiece> reuleaux_layout(std::span<const double> th) {
  const int n = static_cast<int>(th.size());
  const int half = (n + 1) / 2;
  std::vector<ArcPiece> out;
  out.reserve(2 * n);
  double phi = 0.0;
  Vec2 p{};
  for (int k = 0; k < n; ++k) {
    const double a = phi, b = phi + th[k];
    const Vec2 c = p - unit(a);
    out.push_back({a, b, c, 1.0});
    p = c + unit(b);
    const double v = th[(k + half) % n];
    out.push_back({b, b + v, p, 0.0});
    phi = b + v;
  }
  return out;
}

Vec2 closure_residual(std::span<const double> th) {
  Vec2 r{};
  for (const auto& pc : reuleaux_layout(th))
    if (pc.radius > 0.0) r += unit(pc.phi_end) - unit(pc.phi_start);
  return r;
}

double layout_area(std::span<const double> th) {
  double sum = 0.0;
  for (const auto& pc : reuleaux_layout(th)) {
    if (pc.radius <= 0.0) continue;
    const Vec2 iu{std::sin(pc.phi_end) - std::sin(pc.phi_start), std::cos(pc.phi_start) - std::cos(pc.phi_end)};
    sum += dot(pc.center, iu) + pc.span();
  }
  return 0.5 * sum;
}

ArcBody build_reuleaux(const ReuleauxSpec& spec) {
  validate_spec(spec);
  std::vector<double> th = spec.angles;
  for (double& t : th) t = std::clamp(t, 0.0, kThird);

  ArcBody body;
  try {
    body = ArcBody(reuleaux_layout(th));
  } catch (const Error& e) {
    throw Error(ErrorKind::ConstructionError, std::string("angle vector does not close: ") + e.what());
  }
  body = translate(body, -circumcircle(body).center);
  for (int i = 0; i < 256; ++i) {
    const double w = width(body, kTwoPi * i / 256.0);
    if (std::abs(w - 1.0) > kGeomTol)
      throw Error(ErrorKind::ConstructionError, "width check failed: " + fmt10(w));
  }
  return body;
}

double circular_segment_area(double theta) {
  if (!(theta >= 0.0 && theta <= kThird + 1e-12))
    throw Error(ErrorKind::InvalidParameter, "segment angle outside [0, pi/3]");
  return 0.5 * (theta - std::sin(theta));
}

bool is_reuleaux(const ArcBody& p) {
  int arcs = 0;
  for (const auto& pc : p.pieces()) {
    if (is_unit_arc(pc)) ++arcs;
    else if (pc.radius > 1e-9) return false;
  }
  if (arcs < 3) return false;
  for (int i = 0; i < 64; ++i)
    if (std::abs(width(p, kPi * i / 64.0) - 1.0) > 1e-8) return false;
  return true;
}

ArcBody skeleton(const ArcBody& p) {
  if (!is_reuleaux(p)) throw Error(ErrorKind::InvalidParameter, "skeleton needs a Reuleaux polygon");
  std::vector<Vec2> verts;
  for (const auto& pc : p.pieces())
    if (pc.radius <= 1e-9) verts.push_back(pc.center);
  return polygon(verts);
}

ArcBody tangent_polygon(const ArcBody& p) {
  if (!is_reuleaux(p)) throw Error(ErrorKind::InvalidParameter, "tangent polygon needs a Reuleaux polygon");
  std::vector<double> normals;
  for (const auto& pc : p.pieces())
    if (is_unit_arc(pc)) {
      normals.push_back(pc.phi_start);
      normals.push_back(pc.phi_end);
    }
  for (double& t : normals) t = wrap_angle(t);
  std::sort(normals.begin(), normals.end());
  std::vector<double> lines;
  for (double t : normals)
    if (lines.empty() || t - lines.back() > 1e-12) lines.push_back(t);
  if (lines.size() > 1 && lines.front() + kTwoPi - lines.back() <= 1e-12) lines.pop_back();

  // Corner between consecutive tangent lines x·u(φ) = h(φ).
  std::vector<Vec2> verts;
  const std::size_t m = lines.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = lines[i], b = lines[(i + 1) % m];
    const Vec2 ua = unit(a), ub = unit(b);
    const double ha = p.support(a), hb = p.support(b);
    const double det = cross(ua, ub);
    verts.push_back({(ha * ub.y - hb * ua.y) / det, (ua.x * hb - ub.x * ha) / det});
  }
  return polygon(verts);
}

ReuleauxSpec random_spec(int n, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidParameter, "n must be odd and >= 3");
  if (n == 3) return regular_spec(3);
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  std::exponential_distribution<double> expo(1.0);
  const std::vector<double> reg(n, kPi / n);

  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<double> x(n);
    for (double& v : x) v = expo(rng);
    const double s = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v *= kPi / s;
    if (!in_box(x)) continue;

    for (double tau = 1.0; tau > 1e-6; tau *= 0.5) {
      std::vector<double> y(n);
      for (int i = 0; i < n; ++i) y[i] = reg[i] + tau * (x[i] - reg[i]);
      if (project_closure(y) && in_box(y)) {
        const double s2 = std::accumulate(y.begin(), y.end(), 0.0);
        if (std::abs(s2 - kPi) <= 1e-13) return {y};
      }
    }
  }
  throw Error(ErrorKind::NumericalFailure, "could not sample a Reuleaux spec");
}

std::vector<Vec2> sample_in_polygon(const ArcBody& poly, std::uint64_t seed, int m) {
  std::vector<std::pair<Vec2, double>> planes;
  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (std::size_t i = 0; i < poly.pieces().size(); ++i) {
    const auto& pc = poly.pieces()[i];
    lo = {std::min(lo.x, pc.center.x - pc.radius), std::min(lo.y, pc.center.y - pc.radius)};
    hi = {std::max(hi.x, pc.center.x + pc.radius), std::max(hi.y, pc.center.y + pc.radius)};
    if (poly.atoms()[i] > 0.0) planes.push_back({unit(pc.phi_start), pc.support(pc.phi_start)});
  }
  std::mt19937_64 rng(seed ^ 0xC0FFEEULL);
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
  std::vector<Vec2> out;
  for (long guard = 0; static_cast<int>(out.size()) < m; ++guard) {
    if (guard > 1000000L * (m + 1)) throw Error(ErrorKind::NumericalFailure, "rejection sampling stalled");
    const Vec2 q{ux(rng), uy(rng)};
    if (std::all_of(planes.begin(), planes.end(), [&](const auto& pl) { return dot(q, pl.first) <= pl.second; }))
      out.push_back(q);
  }
  return out;
}

ArcBody sandwich_from_points(const ArcBody& p, std::span<const Vec2> pts) {
  ArcBody s = skeleton(p);
  if (pts.empty()) return s;
  const ArcBody extra = pts.size() == 1 ? point_body(pts[0]) : polygon(pts);
  return hull_of_union(s, extra);
}

ArcBody sandwich_sample(const ArcBody& p, std::uint64_t seed, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidParameter, "sample size must be nonnegative");
  const auto pts = sample_in_polygon(tangent_polygon(p), seed, m);
  return sandwich_from_points(p, pts);
}

}  // namespace cwidth
