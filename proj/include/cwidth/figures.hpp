#pragma once

#include <string>

#include "cwidth/arcbody.hpp"
#include "cwidth/optim2d.hpp"
#include "cwidth/reuleaux.hpp"

namespace cwidth {

// Shape codes for the Minkowski figure: 'R' Reuleaux triangle, 'T' equilateral
// triangle of unit side, 'H' regular hexagon of unit width.
ArcBody figure_shape(char code);

// K + (−K) in grey with K (pink) and −K (red) placed inside it; the grey area
// left uncovered is 2A(K, −K).
std::string figure_minkowski(char shape);
// Reuleaux polygon with its skeleton and tangent polygon.
std::string figure_skeleton(const ReuleauxSpec& spec);
// S = conv(K ∪ −K) drawn between B(1/2) and B(√3/3), with K outlined.
std::string figure_annulus(const ArcBody& k);
std::string body_svg(const ArcBody& k);
// Polygon whose support values on the grid are h, inside the annulus circles.
std::string support_vector_svg(const SupportVector& h);

}  // namespace cwidth
