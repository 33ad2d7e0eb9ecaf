#pragma once

#include <algorithm>
#include <cmath>

#include "mgrrt/errors.hpp"

namespace mgrrt {

/// Degeneracy tolerance for planar geometry, in meters. Workspaces span
/// 1e2..1e3 m, so double precision leaves ample headroom below this.
inline constexpr double kEpsGeom = 1e-9;

/// Planar point / vector, coordinates in meters.
struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2() = default;
  constexpr Vec2(double x_in, double y_in) : x(x_in), y(y_in) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

  constexpr bool operator==(const Vec2& r) const = default;

  constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
  /// z-component of the 3D cross product; sign gives turn direction.
  constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
  constexpr double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Directed line segment. Callers keep a != b within kEpsGeom.
struct Segment {
  Vec2 a;
  Vec2 b;
};

/// Axis-aligned rectangle, lo <= hi per axis.
struct Rect {
  Vec2 lo;
  Vec2 hi;

  constexpr double width() const { return hi.x - lo.x; }
  constexpr double height() const { return hi.y - lo.y; }
  constexpr bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
};

/// Euclidean distance between two points.
inline double distance(const Vec2& a, const Vec2& b) { return (b - a).norm(); }

/**
 * @brief Turning angle at `mid` between segments prev->mid and mid->next.
 *
 * Zero for a straight continuation, pi for a full reversal. The cosine is
 * clamped to [-1, 1] before acos: dot products of unit vectors can exceed
 * 1 by a few ulps.
 *
 * @throws DegenerateSegment if either incident segment is shorter than
 *         kEpsGeom.
 */
inline double turning_angle(const Vec2& prev, const Vec2& mid, const Vec2& next) {
  const Vec2 u = mid - prev;
  const Vec2 v = next - mid;
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu < kEpsGeom || nv < kEpsGeom) {
    throw DegenerateSegment("turning_angle: incident segment shorter than tolerance");
  }
  const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
  return std::acos(c);
}

/// Closest point to p on segment s (projection clamped to the endpoints).
inline Vec2 closest_point_on_segment(const Segment& s, const Vec2& p) {
  const Vec2 d = s.b - s.a;
  const double len_sq = d.norm_sq();
  if (len_sq < kEpsGeom * kEpsGeom) {
    return s.a;
  }
  const double t = std::clamp((p - s.a).dot(d) / len_sq, 0.0, 1.0);
  return s.a + d * t;
}

/// Minimum distance from point p to segment s.
inline double point_segment_distance(const Vec2& p, const Segment& s) {
  return distance(p, closest_point_on_segment(s, p));
}

namespace detail {

/// Orientation sign of the triple (a, b, c): >0 counterclockwise, <0
/// clockwise, 0 collinear.
inline int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = (b - a).cross(c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

inline bool on_segment_collinear(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Whether two closed segments share at least one point.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_collinear(s1.a, s1.b, s2.a)) return true;
  if (o2 == 0 && on_segment_collinear(s1.a, s1.b, s2.b)) return true;
  if (o3 == 0 && on_segment_collinear(s2.a, s2.b, s1.a)) return true;
  if (o4 == 0 && on_segment_collinear(s2.a, s2.b, s1.b)) return true;
  return false;
}

/// Minimum distance between two closed segments.
inline double segment_segment_distance(const Segment& s1, const Segment& s2) {
  if (segments_intersect(s1, s2)) return 0.0;
  return std::min(std::min(point_segment_distance(s1.a, s2), point_segment_distance(s1.b, s2)),
                  std::min(point_segment_distance(s2.a, s1), point_segment_distance(s2.b, s1)));
}

/// Distance from p to the closed rectangle (0 if p is inside).
inline double point_rect_distance(const Vec2& p, const Rect& r) {
  const double dx = std::max({r.lo.x - p.x, 0.0, p.x - r.hi.x});
  const double dy = std::max({r.lo.y - p.y, 0.0, p.y - r.hi.y});
  return std::hypot(dx, dy);
}

/// Minimum distance from segment s to the closed rectangle (0 on overlap).
inline double segment_rect_distance(const Segment& s, const Rect& r) {
  if (r.contains(s.a) || r.contains(s.b)) return 0.0;
  const Vec2 bl = r.lo;
  const Vec2 br{r.hi.x, r.lo.y};
  const Vec2 tr = r.hi;
  const Vec2 tl{r.lo.x, r.hi.y};
  const Segment edges[4] = {{bl, br}, {br, tr}, {tr, tl}, {tl, bl}};
  double best = segment_segment_distance(s, edges[0]);
  for (int i = 1; i < 4; ++i) {
    best = std::min(best, segment_segment_distance(s, edges[i]));
  }
  return best;
}

}  // namespace detail

/**
 * @brief True iff segment s comes within `radius` of `center`.
 *
 * Obstacles are closed sets: tangency counts as a hit.
 */
inline bool segment_circle_hit(const Segment& s, const Vec2& center, double radius) {
  return point_segment_distance(center, s) <= radius;
}

/**
 * @brief True iff segment s comes within `inflation` of the rectangle.
 *
 * Exact rounded-rectangle distance test; tangency counts as a hit.
 */
inline bool segment_rect_hit(const Segment& s, const Rect& rect, double inflation) {
  return detail::segment_rect_distance(s, rect) <= inflation;
}

}  // namespace mgrrt
