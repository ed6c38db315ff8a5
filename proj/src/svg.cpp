#include "cwidth/svg.hpp"

#include <cmath>
#include <cstdio>

namespace cwidth {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

void SvgCanvas::grow(Vec2 p, double pad) {
  xmin_ = std::min(xmin_, p.x - pad);
  xmax_ = std::max(xmax_, p.x + pad);
  ymin_ = std::min(ymin_, p.y - pad);
  ymax_ = std::max(ymax_, p.y + pad);
}

std::string SvgCanvas::coord(Vec2 p) const { return num(p.x * scale_) + "," + num(-p.y * scale_); }

std::string SvgCanvas::attrs(const Style& s) {
  return "fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.stroke_width) +
         "\" opacity=\"" + num(s.opacity) + "\"";
}

void SvgCanvas::body(const ArcBody& k, const Style& style) {
  std::string d;
  const auto& pieces = k.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const ArcPiece& p = pieces[i];
    const Vec2 a = p.point(p.phi_start);
    d += (i == 0 ? "M" : "L") + coord(a) + " ";
    grow(a);
    if (p.radius > 0.0) {
      // Split long arcs so no single command spans more than π.
      const int parts = p.span() > kPi - 1e-9 ? 2 : 1;
      for (int j = 1; j <= parts; ++j) {
        const Vec2 b = p.point(p.phi_start + p.span() * j / parts);
        d += "A" + num(p.radius * scale_) + "," + num(p.radius * scale_) + " 0 0,0 " + coord(b) + " ";
      }
      for (int j = 0; j <= 16; ++j) grow(p.point(p.phi_start + p.span() * j / 16));
    }
  }
  d += "Z";
  items_.push_back("<path d=\"" + d + "\" " + attrs(style) + "/>");
}

void SvgCanvas::polyline(std::span<const Vec2> pts, bool closed, const Style& style) {
  std::string s;
  for (const Vec2& p : pts) {
    s += coord(p) + " ";
    grow(p);
  }
  items_.push_back(std::string(closed ? "<polygon" : "<polyline") + " points=\"" + s + "\" " + attrs(style) + "/>");
}

void SvgCanvas::circle(Vec2 c, double r, const Style& style) {
  grow(c, r);
  items_.push_back("<circle cx=\"" + num(c.x * scale_) + "\" cy=\"" + num(-c.y * scale_) + "\" r=\"" +
                   num(r * scale_) + "\" " + attrs(style) + "/>");
}

void SvgCanvas::text(Vec2 at, const std::string& s, double size_px) {
  grow(at);
  items_.push_back("<text x=\"" + num(at.x * scale_) + "\" y=\"" + num(-at.y * scale_) + "\" font-size=\"" +
                   num(size_px) + "\" font-family=\"sans-serif\">" + escape(s) + "</text>");
}

std::string SvgCanvas::str() const {
  const double margin = 0.05 * std::max(xmax_ - xmin_, ymax_ - ymin_) + 1e-6;
  const double x0 = (xmin_ - margin) * scale_, y0 = -(ymax_ + margin) * scale_;
  const double w = (xmax_ - xmin_ + 2 * margin) * scale_, h = (ymax_ - ymin_ + 2 * margin) * scale_;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " + num(h) + "\">\n";
  for (const auto& item : items_) out += "  " + item + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace cwidth
