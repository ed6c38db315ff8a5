#include "cwidth/figures.hpp"

#include <cmath>

#include "cwidth/svg.hpp"

namespace cwidth {

namespace {

const Style kOutline{"none", "black", 1.5, 1.0};

ArcBody reuleaux_triangle() { return build_reuleaux(regular_spec(3)); }

}  // namespace

ArcBody figure_shape(char code) {
  switch (code) {
    case 'R':
      return reuleaux_triangle();
    case 'T':
      return skeleton(reuleaux_triangle());
    case 'H':
      return regular_hexagon();
    default:
      throw Error(ErrorKind::InvalidParameter, std::string("unknown shape '") + code + "' (use R, T or H)");
  }
}

std::string figure_minkowski(char shape) {
  const ArcBody k = figure_shape(shape);
  const ArcBody mk = reflect_origin(k);
  const ArcBody sum = minkowski_sum(k, mk);
  // K + q ⊂ K + (−K) for every q in −K: push each copy to opposite sides.
  const ArcBody kin = translate(k, mk.support_point(kPi));
  const ArcBody mkin = translate(mk, k.support_point(0.0));
  SvgCanvas c;
  c.body(sum, {"#bbbbbb", "black", 1.5, 1.0});
  c.body(kin, {"#f4a6c6", "black", 1.0, 1.0});
  c.body(mkin, {"#d62728", "black", 1.0, 0.85});
  const double top = sum.support(kPi / 2) + 0.15;
  c.text({-sum.support(kPi), top + 0.12}, "A(K) = " + fmt10(area(k)) + "   A(-K) = " + fmt10(area(mk)));
  c.text({-sum.support(kPi), top}, "A(K+(-K)) = " + fmt10(area(sum)) + "   2A(K,-K) = " + fmt10(2.0 * mixed_area(k, mk)));
  return c.str();
}

std::string figure_skeleton(const ReuleauxSpec& spec) {
  const ArcBody p = build_reuleaux(spec);
  SvgCanvas c;
  c.body(tangent_polygon(p), {"#dde8f6", "#1f4e99", 1.0, 1.0});
  c.body(p, {"#fbe3a8", "black", 1.5, 1.0});
  c.body(skeleton(p), {"#9ccc9c", "#2d6a2d", 1.0, 1.0});
  c.text({-0.6, 0.85}, "A(S(P)) = " + fmt10(area(skeleton(p))) + "   A(P) = " + fmt10(area(p)) +
                           "   A(C(P)) = " + fmt10(area(tangent_polygon(p))));
  return c.str();
}

std::string figure_annulus(const ArcBody& k) {
  const ArcBody s = hull_of_union(k, reflect_origin(k));
  SvgCanvas c;
  c.circle({}, std::sqrt(3.0) / 3.0, {"#eeeeee", "black", 1.0, 1.0});
  c.body(s, {"#f4a6c6", "black", 1.5, 0.9});
  c.body(k, {"none", "#d62728", 1.0, 1.0});
  c.circle({}, 0.5, {"none", "#1f4e99", 1.0, 1.0});
  c.text({-0.55, 0.65}, "S = conv(K, -K);  0.5 Per(S) - A(S) = " + fmt10(0.5 * perimeter(s) - area(s)));
  return c.str();
}

std::string body_svg(const ArcBody& k) {
  SvgCanvas c;
  c.body(k, {"#f4a6c6", "black", 1.5, 1.0});
  return c.str();
}

std::string support_vector_svg(const SupportVector& h) {
  const int n = h.n();
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) {
    const double a = kTwoPi * i / n, b = kTwoPi * (i + 1) / n;
    const Vec2 ua = unit(a), ub = unit(b);
    const double det = cross(ua, ub);
    const double ha = h.h[i], hb = h.h[(i + 1) % n];
    pts.push_back({(ha * ub.y - hb * ua.y) / det, (ua.x * hb - ub.x * ha) / det});
  }
  SvgCanvas c;
  c.circle({}, std::sqrt(3.0) / 3.0, {"#eeeeee", "black", 1.0, 1.0});
  c.polyline(pts, true, {"#f4a6c6", "black", 1.5, 0.9});
  c.circle({}, 0.5, {"none", "#1f4e99", 1.0, 1.0});
  c.text({-0.55, 0.65}, "objective = " + fmt10(objective_raw(h.h)));
  return c.str();
}

}  // namespace cwidth
