#pragma once

#include <span>
#include <string>
#include <vector>

#include "cwidth/arcbody.hpp"

namespace cwidth {

struct Style {
  std::string fill = "none";
  std::string stroke = "black";
  double stroke_width = 1.0;  // pixels
  double opacity = 1.0;
};

// SVG 1.1 canvas in math coordinates (y up); the view box is fitted to the content.
class SvgCanvas {
 public:
  explicit SvgCanvas(double pixels_per_unit = 200.0) : scale_(pixels_per_unit) {}

  void body(const ArcBody& k, const Style& style);
  void polyline(std::span<const Vec2> pts, bool closed, const Style& style);
  void circle(Vec2 c, double r, const Style& style);
  void text(Vec2 at, const std::string& s, double size_px = 12.0);

  std::string str() const;

 private:
  double scale_;
  std::vector<std::string> items_;
  double xmin_ = 1e300, xmax_ = -1e300, ymin_ = 1e300, ymax_ = -1e300;

  void grow(Vec2 p, double pad = 0.0);
  std::string coord(Vec2 p) const;
  static std::string attrs(const Style& s);
};

}  // namespace cwidth
