#pragma once

// SVG drawings of cycles in R^2. Unbounded cells are clipped to a box around
// all vertices and the origin; coordinates are printed from exact values.

#include "tropical/cycle.hpp"

#include <string>

namespace tropical {

namespace svg_detail {

inline constexpr long kScale = 40;
inline constexpr long kMargin = 2;

/// Fixed-point decimal with two digits, rounded half up.
inline std::string decimal(const Rational& q) {
  const Integer h = floor(q * 100 + Rational(1, 2));
  Integer whole = abs(h) / 100, frac = abs(h) % 100;
  std::string s = (h < 0 ? "-" : "") + whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    if (f.size() < 2) f = "0" + f;
    if (f.back() == '0') f.pop_back();
    s += "." + f;
  }
  return s;
}

struct Box {
  Rational xmin, xmax, ymin, ymax;

  Polyhedron polygon() const {
    return Polyhedron::from_generators(2, {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}});
  }
  std::string x(const Rational& v) const { return decimal((v - xmin) * kScale); }
  std::string y(const Rational& v) const { return decimal((ymax - v) * kScale); }
};

inline Box box_of(const TropicalCycle& c) {
  Rational xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& [p, w] : c.weighted_cells())
    for (const auto& v : p.vertices()) {
      xmin = std::min(xmin, v[0]);
      xmax = std::max(xmax, v[0]);
      ymin = std::min(ymin, v[1]);
      ymax = std::max(ymax, v[1]);
    }
  return {xmin - kMargin, xmax + kMargin, ymin - kMargin, ymax + kMargin};
}

/// Vertices of a bounded polygon in counterclockwise order.
inline std::vector<RatVector> ordered_vertices(const Polyhedron& p) {
  std::vector<RatVector> vs = p.vertices();
  const RatVector c = p.relative_interior_point();
  auto half = [&](const RatVector& v) {
    const Rational dx = v[0] - c[0], dy = v[1] - c[1];
    return dy > 0 || (dy == 0 && dx > 0) ? 0 : 1;
  };
  std::sort(vs.begin(), vs.end(), [&](const RatVector& a, const RatVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
  return vs;
}

} // namespace svg_detail

/// Deterministic SVG 1.1 drawing of a cycle in R^2: edges, dotted vertices,
/// shaded regions, and labels for weights other than 1.
inline std::string render_svg(const TropicalCycle& c) {
  using namespace svg_detail;
  if (c.ambient_rank() != 2) throw Error("plot supports rank 2 only");
  const Box b = box_of(c);
  const Polyhedron frame = b.polygon();
  std::string body, labels;
  auto label = [&](const RatVector& at, const Integer& w) {
    if (w == 1) return;
    labels += "<text x=\"" + b.x(at[0]) + "\" y=\"" + b.y(at[1]) + "\" dx=\"4\" dy=\"-4\">" + w.get_str() + "</text>\n";
  };
  for (const auto& [p, w] : c.weighted_cells()) {
    const auto clipped = intersect(p, frame);
    if (!clipped) continue;
    const RatVector mid = clipped->relative_interior_point();
    if (p.dim() == 2) {
      std::string pts;
      for (const auto& v : ordered_vertices(*clipped)) pts += (pts.empty() ? "" : " ") + b.x(v[0]) + "," + b.y(v[1]);
      body += "<polygon points=\"" + pts + "\" fill=\"lightgray\" stroke=\"none\"/>\n";
    } else if (p.dim() == 1) {
      const auto& vs = clipped->vertices();
      body += "<line x1=\"" + b.x(vs[0][0]) + "\" y1=\"" + b.y(vs[0][1]) + "\" x2=\"" + b.x(vs.back()[0]) + "\" y2=\"" +
              b.y(vs.back()[1]) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    label(mid, w);
  }
  std::string dots;
  for (std::size_t i = 0; i < c.complex().size(); ++i) {
    const auto& cell = c.complex().cell(i);
    if (cell.dim() != 0) continue;
    const auto& v = cell.vertices()[0];
    dots += "<circle cx=\"" + b.x(v[0]) + "\" cy=\"" + b.y(v[1]) + "\" r=\"3\" fill=\"black\"/>\n";
  }
  const std::string width = decimal((b.xmax - b.xmin) * kScale), height = decimal((b.ymax - b.ymin) * kScale);
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
       "\" viewBox=\"0 0 " + width + " " + height + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<line x1=\"0\" y1=\"" + b.y(0) + "\" x2=\"" + width + "\" y2=\"" + b.y(0) +
       "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + b.x(0) + "\" y1=\"0\" x2=\"" + b.x(0) + "\" y2=\"" + height +
       "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  return s + body + dots + labels + "</svg>\n";
}

} // namespace tropical
