#include "vlnaug/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string_view>
#include <vector>

#include "vlnaug/error.hpp"

namespace vlnaug {
namespace {

struct Point {
  double x;
  double y;
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise, no repeated end point.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_viewpoint(const SceneModel& scene, const NavGraph& graph,
                             const RenderSpec& spec) {
  if (!(spec.radius > 0.0)) throw Error("render radius must be positive");
  if (spec.width <= 0 || spec.height <= 0) throw Error("render canvas must be non-empty");
  const Viewpoint& vp = graph.viewpoint(spec.viewpoint);
  const Vec3 c = vp.position;
  const double scale = std::min(spec.width, spec.height) / (2.0 * spec.radius);
  const double cx = spec.width / 2.0;
  const double cy = spec.height / 2.0;
  auto to_canvas = [&](double x, double y) {
    return Point{cx + (x - c.x) * scale, cy - (y - c.y) * scale};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  svg += "  <defs>\n";
  svg += "    <marker id=\"arrowhead\" markerWidth=\"10\" markerHeight=\"10\" refX=\"9\" "
         "refY=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f5fa8\"/></marker>\n";
  svg += "  </defs>\n";
  svg += "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) +
         "\" height=\"" + std::to_string(spec.height) + "\" fill=\"#ffffff\"/>\n";
  svg += "  <circle class=\"range\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
         num(spec.radius * scale) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  svg += "  <g class=\"objects\">\n";
  for (const SceneObject& o : scene.objects) {
    if (!(distance(c, o.center) <= spec.radius)) continue;
    const std::array<Vec3, 3> axes = {o.axis0 * o.radii.x, o.axis1 * o.radii.y,
                                      o.axis2() * o.radii.z};
    std::vector<Point> corners;
    for (int s = 0; s < 8; ++s) {
      Vec3 p = o.center;
      for (int a = 0; a < 3; ++a) p = p + axes[a] * ((s >> a) & 1 ? 1.0 : -1.0);
      corners.push_back(to_canvas(p.x, p.y));
    }
    std::string points;
    for (const Point& p : convex_hull(corners)) {
      if (!points.empty()) points += ' ';
      points += num(p.x) + "," + num(p.y);
    }
    const Point label = to_canvas(o.center.x, o.center.y);
    const std::string name = xml_escape(category_name(scene, o.index));
    svg += "    <g class=\"object\" data-index=\"" + std::to_string(o.index) + "\">";
    svg += "<polygon class=\"obb\" points=\"" + points +
           "\" fill=\"#f2d7a6\" fill-opacity=\"0.5\" stroke=\"#8a5a12\"/>";
    svg += "<text x=\"" + num(label.x) + "\" y=\"" + num(label.y) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + name + "</text></g>\n";
  }
  svg += "  </g>\n";

  svg += "  <g class=\"neighbors\">\n";
  for (const Neighbor& n : graph.neighbors(spec.viewpoint)) {
    const Vec3& q = graph.viewpoint(n.id).position;
    double dx = q.x - c.x;
    double dy = q.y - c.y;
    const double horizontal = std::hypot(dx, dy);
    if (horizontal > spec.radius) {
      dx *= spec.radius / horizontal;
      dy *= spec.radius / horizontal;
    }
    const Point tip = to_canvas(c.x + dx, c.y + dy);
    svg += "    <g class=\"neighbor\" data-id=\"" + xml_escape(n.id) + "\">";
    svg += "<line class=\"arrow\" x1=\"" + num(cx) + "\" y1=\"" + num(cy) + "\" x2=\"" +
           num(tip.x) + "\" y2=\"" + num(tip.y) +
           "\" stroke=\"#1f5fa8\" stroke-width=\"2\" marker-end=\"url(#arrowhead)\"/>";
    svg += "<text x=\"" + num(tip.x) + "\" y=\"" + num(tip.y) +
           "\" font-size=\"11\" fill=\"#1f5fa8\">" + num(n.length) + " m</text></g>\n";
  }
  svg += "  </g>\n";

  svg += "  <g class=\"viewpoint\" data-id=\"" + xml_escape(vp.id) + "\"><circle cx=\"" +
         num(cx) + "\" cy=\"" + num(cy) + "\" r=\"6\" fill=\"#d62728\"/><text x=\"" +
         num(cx + 8) + "\" y=\"" + num(cy - 8) + "\" font-size=\"12\">" + xml_escape(vp.id) +
         "</text></g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace vlnaug
