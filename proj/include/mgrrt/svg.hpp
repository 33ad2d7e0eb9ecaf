#pragma once

#include <charconv>
#include <string>

#include "mgrrt/result.hpp"

namespace mgrrt {

namespace svg_detail {

inline std::string fixed(double v, int precision = 3) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

}  // namespace svg_detail

/**
 * @brief Render a result as a standalone SVG.
 *
 * Obstacles are filled with their inflated outlines dashed; raw, reduced,
 * and smoothed paths get distinct strokes; start and goals are marked. The
 * coordinate frame matches the scenario bounds (y up). Output is byte-stable
 * for identical input: coordinates are printed with fixed precision.
 */
inline std::string render_svg(const RunResult& r, bool draw_tree = false) {
  using svg_detail::fixed;
  const Rect& b = r.scenario.bounds;
  const double w = b.width();
  const double h = b.height();
  const double margin = 0.02 * std::max(w, h);
  // SVG y grows downward; mirror about the bounds midline.
  const auto fy = [&](double y) { return b.lo.y + b.hi.y - y; };
  const double marker = 0.012 * std::max(w, h);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         fixed(b.lo.x - margin) + " " + fixed(b.lo.y - margin) + " " + fixed(w + 2 * margin) +
         " " + fixed(h + 2 * margin) + "\" width=\"800\" height=\"" +
         fixed(800.0 * (h + 2 * margin) / (w + 2 * margin), 0) + "\">\n";
  out += "<style>\n"
         ".frame { fill: none; stroke: #222; stroke-width: " + fixed(0.004 * w) + "; }\n"
         ".obstacle { fill: #9aa5b1; stroke: none; }\n"
         ".obstacle-inflation { fill: none; stroke: #5f6b7a; stroke-dasharray: " +
         fixed(0.01 * w) + "; stroke-width: " + fixed(0.002 * w) + "; }\n"
         ".tree-edge { stroke: #d7dce2; stroke-width: " + fixed(0.0015 * w) + "; }\n"
         ".raw-path { fill: none; stroke: #b0b7c3; stroke-width: " + fixed(0.003 * w) + "; }\n"
         ".reduced-path { fill: none; stroke: #2a6fdb; stroke-width: " + fixed(0.003 * w) +
         "; stroke-dasharray: " + fixed(0.012 * w) + "; }\n"
         ".smoothed-path { fill: none; stroke: #d1342f; stroke-width: " + fixed(0.0035 * w) +
         "; }\n"
         ".start-marker { fill: #1d8a46; stroke: none; }\n"
         ".goal-marker { fill: #e58f00; stroke: none; }\n"
         ".label { font: " + fixed(2.5 * marker) + "px sans-serif; fill: #333; }\n"
         "</style>\n";

  out += "<rect class=\"frame\" x=\"" + fixed(b.lo.x) + "\" y=\"" + fixed(b.lo.y) +
         "\" width=\"" + fixed(w) + "\" height=\"" + fixed(h) + "\"/>\n";

  const double inflation = r.scenario.uav.uav_radius;
  for (const Obstacle& ob : r.scenario.obstacles) {
    if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
      out += "<circle class=\"obstacle\" cx=\"" + fixed(c->center.x) + "\" cy=\"" +
             fixed(fy(c->center.y)) + "\" r=\"" + fixed(c->radius) + "\"/>\n";
      if (inflation > 0.0) {
        out += "<circle class=\"obstacle-inflation\" cx=\"" + fixed(c->center.x) + "\" cy=\"" +
               fixed(fy(c->center.y)) + "\" r=\"" + fixed(c->radius + inflation) + "\"/>\n";
      }
    } else {
      const Rect& box = std::get<RectObstacle>(ob).box;
      out += "<rect class=\"obstacle\" x=\"" + fixed(box.lo.x) + "\" y=\"" +
             fixed(fy(box.hi.y)) + "\" width=\"" + fixed(box.width()) + "\" height=\"" +
             fixed(box.height()) + "\"/>\n";
      if (inflation > 0.0) {
        // The exact inflated shape is the rectangle grown by the inflation
        // with quarter-circle corners.
        out += "<rect class=\"obstacle-inflation\" x=\"" + fixed(box.lo.x - inflation) +
               "\" y=\"" + fixed(fy(box.hi.y) - inflation) + "\" width=\"" +
               fixed(box.width() + 2 * inflation) + "\" height=\"" +
               fixed(box.height() + 2 * inflation) + "\" rx=\"" + fixed(inflation) + "\"/>\n";
      }
    }
  }

  if (draw_tree) {
    for (const TreeNode& n : r.tree) {
      if (n.parent < 0) continue;
      const Vec2& p = r.tree[static_cast<std::size_t>(n.parent)].position;
      out += "<line class=\"tree-edge\" x1=\"" + fixed(p.x) + "\" y1=\"" + fixed(fy(p.y)) +
             "\" x2=\"" + fixed(n.position.x) + "\" y2=\"" + fixed(fy(n.position.y)) + "\"/>\n";
    }
  }

  const auto polyline = [&](const Polyline& pts, const std::string& cls) {
    if (pts.size() < 2) return;
    std::string s = "<polyline class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += fixed(pts[i].x) + ',' + fixed(fy(pts[i].y));
    }
    s += "\"/>\n";
    out += s;
  };
  for (const GoalOutput& g : r.goals) {
    if (!g.reached) continue;
    polyline(g.raw_path, "raw-path");
    polyline(g.reduced_path, "reduced-path");
    polyline(g.smoothed_samples, "smoothed-path");
  }

  out += "<circle class=\"start-marker\" cx=\"" + fixed(r.scenario.start.x) + "\" cy=\"" +
         fixed(fy(r.scenario.start.y)) + "\" r=\"" + fixed(marker) + "\"/>\n";
  for (std::size_t i = 0; i < r.scenario.goals.size(); ++i) {
    const Vec2& g = r.scenario.goals[i];
    out += "<circle class=\"goal-marker\" cx=\"" + fixed(g.x) + "\" cy=\"" + fixed(fy(g.y)) +
           "\" r=\"" + fixed(marker) + "\"/>\n";
    out += "<text class=\"label\" x=\"" + fixed(g.x + 1.5 * marker) + "\" y=\"" +
           fixed(fy(g.y)) + "\">" + std::to_string(i + 1) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace mgrrt
