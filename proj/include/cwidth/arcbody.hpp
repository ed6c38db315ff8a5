#pragma once

#include <span>
#include <string>
#include <vector>

#include "cwidth/common.hpp"

namespace cwidth {

// One constant-curvature piece of the boundary. On [phi_start, phi_end] the
// support function is h(θ) = center·u(θ) + radius and the boundary point is
// center + radius·u(θ). Radius 0 gives a vertex whose normal cone is the interval.
struct ArcPiece {
  double phi_start = 0.0;
  double phi_end = 0.0;
  Vec2 center;
  double radius = 0.0;

  double span() const { return phi_end - phi_start; }
  double support(double theta) const { return dot(center, unit(theta)) + radius; }
  Vec2 point(double theta) const { return center + radius * unit(theta); }
};

// Planar convex body bounded by circular arcs and segments. Pieces partition
// [0, 2π) in order with a cut at 0; atoms()[i] is the length of the straight
// segment at the junction angle pieces()[i].phi_start.
class ArcBody {
 public:
  ArcBody() = default;
  // Normalizes angles, splits pieces that wrap past 2π, merges identical
  // neighbours and validates the junction/closure invariants (InvalidBody).
  explicit ArcBody(std::vector<ArcPiece> pieces);

  const std::vector<ArcPiece>& pieces() const { return pieces_; }
  const std::vector<double>& atoms() const { return atoms_; }
  bool empty() const { return pieces_.empty(); }

  std::size_t piece_index(double theta) const;
  const ArcPiece& piece_at(double theta) const { return pieces_[piece_index(theta)]; }
  double support(double theta) const;
  Vec2 support_point(double theta) const;

  // Largest |coordinate| over centers plus largest radius; a size scale for tolerances.
  double extent() const;

 private:
  std::vector<ArcPiece> pieces_;
  std::vector<double> atoms_;
};

ArcBody disk(double r, Vec2 center = {});
ArcBody point_body(Vec2 p);
ArcBody polygon(std::span<const Vec2> points);
ArcBody regular_hexagon(double width = 1.0);

double support(const ArcBody& k, double theta);
double width(const ArcBody& k, double theta);
double area(const ArcBody& k);
double perimeter(const ArcBody& k);

ArcBody reflect_origin(const ArcBody& k);
ArcBody translate(const ArcBody& k, Vec2 v);
ArcBody rotate(const ArcBody& k, double alpha);
ArcBody scale(const ArcBody& k, double s);

ArcBody minkowski_sum(const ArcBody& k, const ArcBody& l);
double mixed_area(const ArcBody& k, const ArcBody& l);
// The two independent evaluations behind mixed_area, exposed for testing.
double mixed_area_by_sum(const ArcBody& k, const ArcBody& l);
double mixed_area_by_pairing(const ArcBody& k, const ArcBody& l);

ArcBody hull_of_union(const ArcBody& k, const ArcBody& l);
bool inclusion(const ArcBody& k, const ArcBody& l, double tol = kGeomTol);
// max over θ of h_K(θ) − h_L(θ), evaluated exactly per piece.
double max_support_excess(const ArcBody& k, const ArcBody& l);

// Vertices of the body: boundary points where the support point jumps, plus
// samples along every arc (per_arc points each, endpoints included).
std::vector<Vec2> boundary_points(const ArcBody& k, int per_arc = 16);

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

Circle circumcircle(const ArcBody& k);
// Throws DegenerateInput for zero-area bodies.
Circle incircle(const ArcBody& k);

struct InOutRadii {
  Circle in;
  Circle out;
};
InOutRadii incircle_circumcircle(const ArcBody& k);

// Minimal enclosing circle of a point set (randomized incremental with a fixed shuffle).
Circle min_enclosing_circle(std::vector<Vec2> pts);

// CSV table with header phi_start,phi_end,cx,cy,r.
std::string piece_table_csv(const ArcBody& k);

}  // namespace cwidth
