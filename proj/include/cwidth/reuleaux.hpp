#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwidth/arcbody.hpp"

namespace cwidth {

// Odd-length vector of arc angles θ₁..θₙ with Σθ = π and 0 ≤ θᵢ ≤ π/3.
struct ReuleauxSpec {
  std::vector<double> angles;

  int n() const { return static_cast<int>(angles.size()); }
};

// Throws InvalidParameter when the spec breaks its invariants.
void validate_spec(const ReuleauxSpec& spec);
ReuleauxSpec regular_spec(int n);

// Boundary pieces for an angle vector laid out from normal angle 0: arc k is
// followed by the vertex interval of θ[(k + (n+1)/2) mod n]. Works for any
// nonnegative vector; the resulting chain only closes on Reuleaux specs.
std::vector<ArcPiece> reuleaux_layout(std::span<const double> angles);
// Sum over arcs of u(end) − u(start): the gap left by the layout.
Vec2 closure_residual(std::span<const double> angles);
// Area the layout would enclose, closed or not (used by the angle optimizer).
double layout_area(std::span<const double> angles);

// Unit-width Reuleaux polygon with its circumcenter at the origin.
ArcBody build_reuleaux(const ReuleauxSpec& spec);

// (θ − sin θ)/2 for θ in [0, π/3].
double circular_segment_area(double theta);

// Polygon on the vertices of a Reuleaux polygon.
ArcBody skeleton(const ArcBody& p);
// Polygon bounded by the tangent lines at the arc endpoints.
ArcBody tangent_polygon(const ArcBody& p);
bool is_reuleaux(const ArcBody& p);

// Deterministic per seed. Samples are drawn on the angle simplex, rejected
// until inside the box, then pulled onto the closure constraint.
ReuleauxSpec random_spec(int n, std::uint64_t seed);

// Convex hull of the skeleton and m points drawn uniformly in the tangent polygon.
ArcBody sandwich_sample(const ArcBody& p, std::uint64_t seed, int m = 8);
ArcBody sandwich_from_points(const ArcBody& p, std::span<const Vec2> pts);
std::vector<Vec2> sample_in_polygon(const ArcBody& poly, std::uint64_t seed, int m);

}  // namespace cwidth
