#include <cmath>

#include "cwidth/solid3d.hpp"

namespace cwidth {

namespace {

constexpr int kBallPoints = 300;
constexpr int kWidthDirs = 1000;
constexpr std::uint64_t kWidthSeed = 7;

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

TriMesh symmetric_hull(const TriMesh& m) {
  std::vector<Vec3> pts = m.vertices;
  for (const Vec3& p : m.vertices) pts.push_back(-p);
  return convex_hull3(pts);
}

void add_steiner(VerificationReport& r, const std::string& name, const TriMesh& k, const TriMesh& ball) {
  const MixedVolumes fit = mixed_volumes_fit(k, ball);
  const double per = area(k);
  r.add(name + ".V(B,K,K)_vs_Per/3", fit.v_kkl, per / 3.0, 0.02 * per / 3.0);
  const double mw = mean_width(k);
  r.add(name + ".mean_width_vs_steiner", 3.0 / (2.0 * kPi) * fit.v_kll, mw, 0.02 * mw);
}

}  // namespace

VerificationReport verify_3d_identities(int quality, MeissnerKind kind) {
  if (quality < 20) throw Error(ErrorKind::InvalidParameter, "quality must be at least 20");
  VerificationReport r(std::string("solid3d.") + to_string(kind));
  const TriMesh m = meissner(kind, quality);
  check_mesh(m);
  const double v = volume(m), per = area(m), mw = mean_width(m);
  const double vm = meissner_volume_exact();

  r.add("meissner.volume", v, vm, 0.005 * vm);
  r.add("meissner.area_vs_blaschke", per, 2.0 * (vm + kPi / 3.0), 0.01 * 2.0 * (vm + kPi / 3.0));
  r.add("meissner.mean_width", mw, 1.0, 0.01);
  r.add("blaschke.residual", v - (0.5 * per - kPi / 3.0), 0.0, 0.01 * v);
  r.append(width_report(m, kWidthDirs, kWidthSeed), "meissner.");

  const TriMesh s = symmetric_hull(m);
  check_mesh(s);
  const double rhs = 2.0 * kPi - per;
  r.add("hull_chain.lhs_vs_rhs", 2.0 * kPi * mean_width(s) - area(s), rhs, 0.01 * std::abs(rhs));
  r.add("hull.inradius", inradius3(s), 0.5, 0.01);

  const TriMesh md = decimated(m);
  const MixedVolumes eq12 = mixed_volumes_fit(md, reflect_origin(md));
  const double ref12 = (4.0 * kPi / 3.0 - 2.0 * v) / 6.0;
  r.add("eq12.V(M,M,-M)", eq12.v_kkl, ref12, 0.02 * ref12);

  const double rin = inradius3(m);
  const double rlo = 1.0 - std::sqrt(3.0 / 8.0);
  const double rm = meissner_inradius_exact();
  r.add("chakerian.volume_minus_bound", v - chakerian_bound(rin), 0.0, 1e-3, CheckKind::Ge);
  r.add("chakerian.volume_vs_global_bound", v, chakerian_bound(rlo), 0.0, CheckKind::Ge);
  r.add("inradius.lower", rin, rlo - 0.01, 0.0, CheckKind::Ge);
  r.add("inradius.upper", rin, rm + 0.01, 0.0, CheckKind::Le);
  r.add("r_M.exact", rm, 0.429, 0.001);
  r.add("r_M.mesh", 3.0 * v / (2.0 * kPi / 3.0 + 2.0 * v), 0.429, 0.001);

  const TriMesh ball = ball_mesh(1.0, kBallPoints);
  const MixedVolumes sb = mixed_volumes_fit(s, ball);
  r.add("scaling.V(B,B,S)-2V(B,S,S)", sb.v_kll - 2.0 * sb.v_kkl, 0.0, 0.0, CheckKind::Le);
  add_steiner(r, "steiner.meissner", m, ball);
  return r;
}

VerificationReport verify3d_suite(int quality) {
  VerificationReport r("verify3d");
  const VerificationReport a = verify_3d_identities(quality, MeissnerKind::VertexSmoothed);
  const VerificationReport b = verify_3d_identities(quality, MeissnerKind::FaceSmoothed);
  r.append(a, "vertex.");
  r.append(b, "face.");
  for (const char* key : {"meissner.volume", "meissner.area_vs_blaschke", "meissner.mean_width"})
    r.add(std::string("kinds_agree.") + key, rel_diff(a.find(key)->computed, b.find(key)->computed), 0.0, 0.005,
          CheckKind::Le);

  const TriMesh d = rhombic_dodecahedron();
  check_mesh(d);
  const double vd = volume(d);
  r.add("dodecahedron.volume", vd, std::sqrt(2.0) / 2.0, 1e-12);
  r.add("dodecahedron.area", area(d), 3.0 * std::sqrt(2.0), 1e-12);
  r.add("dodecahedron.4pi/3-6V", 4.0 * kPi / 3.0 - 6.0 * vd, -0.0539, 1e-3);
  const double rlo = 1.0 - std::sqrt(3.0 / 8.0);
  r.add("chakerian_bound.min_inradius", chakerian_bound(rlo), kPi / 3.0 * (3.0 * std::sqrt(6.0) - 7.0), 1e-12);
  r.add("chakerian_bound.ball", chakerian_bound(0.5), kPi / 6.0, 1e-12);

  const TriMesh ball = ball_mesh(1.0, kBallPoints);
  add_steiner(r, "steiner.cube", cube(), ball);
  add_steiner(r, "steiner.dodecahedron", d, ball);
  return r;
}

}  // namespace cwidth
