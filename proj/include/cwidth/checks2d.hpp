#pragma once

#include <cstdint>

#include "cwidth/arcbody.hpp"
#include "cwidth/report.hpp"
#include "cwidth/reuleaux.hpp"

namespace cwidth {

// Convex hull of `count` points drawn uniformly in [-1, 1]².
ArcBody random_polygon(std::uint64_t seed, int count);
// Upper (upper = true) or lower half of the unit disk.
ArcBody half_disk(bool upper);

struct HexagonCover {
  double alpha = 0.0;  // rotation applied to K
  Vec2 shift;          // translation applied after the rotation
  bool bracketed = false;
  ArcBody placed;      // rotated and translated K
  VerificationReport report{"hexagon_cover"};
};

// Places a unit-width body inside the regular hexagon with edge normals kπ/3
// and apothem 1/2. The rotation zeroes m(0) − m(π/3) + m(2π/3), where
// m(v) = (h(v) − h(v+π))/2 is the offset the hexagon has to absorb.
HexagonCover hexagon_cover(const ArcBody& k);

VerificationReport verify_chakerian_chain(const ArcBody& p);
VerificationReport verify_mixed_constant(const ReuleauxSpec& spec, int samples, std::uint64_t seed);
VerificationReport verify_skeleton_bounds(int num_random, int max_n, std::uint64_t seed);
VerificationReport verify_duality(int num_random, std::uint64_t seed);
VerificationReport verify_hull_reformulation(const ArcBody& k);
VerificationReport verify_schneider_identity(const ArcBody& s1, const ArcBody& s2);

// Everything above plus the arcbody identities, on seeded random families.
VerificationReport verify2d_suite(std::uint64_t seed);

}  // namespace cwidth
