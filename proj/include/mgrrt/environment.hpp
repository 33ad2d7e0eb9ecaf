#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "mgrrt/errors.hpp"
#include "mgrrt/geometry.hpp"
#include "mgrrt/rng.hpp"

namespace mgrrt {

struct CircleObstacle {
  Vec2 center;
  double radius = 0.0;
};

struct RectObstacle {
  Rect box;
};

using Obstacle = std::variant<CircleObstacle, RectObstacle>;

/**
 * @brief Immutable planning workspace: bounds, obstacles, and the UAV-radius
 * inflation applied to both.
 *
 * Obstacles are treated as closed sets inflated by `inflation`; the usable
 * bounds shrink by the same amount. Collision queries are exact distance
 * predicates, not sampled.
 */
class Workspace {
 public:
  Workspace(Rect bounds, std::vector<Obstacle> obstacles, double inflation)
      : bounds_(bounds), obstacles_(std::move(obstacles)), inflation_(inflation) {
    if (!(bounds_.lo.finite() && bounds_.hi.finite()) || bounds_.width() <= 0.0 ||
        bounds_.height() <= 0.0) {
      throw InvalidScenario("bounds: must be a non-degenerate rectangle (min < max per axis)");
    }
    if (!(inflation_ >= 0.0)) {
      throw InvalidScenario("inflation must be >= 0");
    }
    if (2.0 * inflation_ >= std::min(bounds_.width(), bounds_.height())) {
      throw InvalidScenario("inflation leaves no usable workspace inside bounds");
    }
    for (std::size_t i = 0; i < obstacles_.size(); ++i) {
      const std::string at = "obstacles[" + std::to_string(i) + "]";
      if (const auto* c = std::get_if<CircleObstacle>(&obstacles_[i])) {
        if (!c->center.finite() || !(c->radius > 0.0)) {
          throw InvalidScenario(at + ": circle radius must be > 0 and center finite");
        }
      } else {
        const auto& r = std::get<RectObstacle>(obstacles_[i]).box;
        if (!r.lo.finite() || !r.hi.finite() || !(r.lo.x < r.hi.x) || !(r.lo.y < r.hi.y)) {
          throw InvalidScenario(at + ": rect needs min < max per axis");
        }
      }
    }
  }

  const Rect& bounds() const { return bounds_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  double inflation() const { return inflation_; }

  /**
   * @brief True iff the segment stays within the shrunk bounds and clears
   * every inflated obstacle.
   *
   * Tangency with an inflated obstacle counts as a collision; lying exactly
   * on the shrunk bounds boundary does not (the workspace is closed).
   */
  bool segment_free(const Segment& s) const {
    if (!s.a.finite() || !s.b.finite()) return false;
    const Rect usable = shrunk_bounds();
    if (!usable.contains(s.a) || !usable.contains(s.b)) return false;
    for (const auto& ob : obstacles_) {
      if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
        if (segment_circle_hit(s, c->center, c->radius + inflation_)) return false;
      } else {
        if (segment_rect_hit(s, std::get<RectObstacle>(ob).box, inflation_)) return false;
      }
    }
    return true;
  }

  /**
   * @brief Signed clearance of a point: minimum over the distances to each
   * inflated obstacle boundary and to each (shrunk) workspace edge.
   *
   * Positive strictly inside the free space, <= 0 otherwise. The workspace
   * boundary counts as an obstacle.
   */
  double signed_clearance(const Vec2& p) const {
    const Rect usable = shrunk_bounds();
    double best = std::min(std::min(p.x - usable.lo.x, usable.hi.x - p.x),
                           std::min(p.y - usable.lo.y, usable.hi.y - p.y));
    for (const auto& ob : obstacles_) {
      double d;
      if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
        d = distance(p, c->center) - (c->radius + inflation_);
      } else {
        const Rect& r = std::get<RectObstacle>(ob).box;
        const double outside = detail::point_rect_distance(p, r);
        if (outside > 0.0) {
          d = outside - inflation_;
        } else {
          // Inside the rectangle: negative penetration depth.
          const double depth = std::min(std::min(p.x - r.lo.x, r.hi.x - p.x),
                                        std::min(p.y - r.lo.y, r.hi.y - p.y));
          d = -depth - inflation_;
        }
      }
      best = std::min(best, d);
    }
    return best;
  }

  /// Strictly positive clearance. @throws PointInCollision if p is not
  /// strictly inside the free space.
  double clearance(const Vec2& p) const {
    const double c = signed_clearance(p);
    if (c <= 0.0) {
      throw PointInCollision("clearance: point inside an inflated obstacle or outside bounds");
    }
    return c;
  }

  /// Whether p is strictly inside the free space.
  bool point_free(const Vec2& p) const { return p.finite() && signed_clearance(p) > 0.0; }

  /// Uniform sample over the full bounds rectangle (no obstacle filtering;
  /// the planner rejects at the edge stage).
  Vec2 sample_uniform(Rng& rng) const {
    const double x = rng.uniform(bounds_.lo.x, bounds_.hi.x);
    const double y = rng.uniform(bounds_.lo.y, bounds_.hi.y);
    return {x, y};
  }

 private:
  Rect shrunk_bounds() const {
    return {{bounds_.lo.x + inflation_, bounds_.lo.y + inflation_},
            {bounds_.hi.x - inflation_, bounds_.hi.y - inflation_}};
  }

  Rect bounds_;
  std::vector<Obstacle> obstacles_;
  double inflation_;
};

}  // namespace mgrrt
