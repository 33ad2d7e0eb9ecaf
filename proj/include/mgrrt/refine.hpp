#pragma once

#include <algorithm>
#include <vector>

#include "mgrrt/environment.hpp"
#include "mgrrt/errors.hpp"
#include "mgrrt/geometry.hpp"

namespace mgrrt {

using Polyline = std::vector<Vec2>;

/// Sum of segment lengths.
inline double polyline_length(const Polyline& p) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    len += distance(p[i], p[i + 1]);
  }
  return len;
}

/// Whether a waypoint path satisfies all path invariants: >= 2 waypoints,
/// consecutive waypoints distinct, every segment collision-free, every
/// interior turning angle within gamma_max.
inline bool path_valid(const Workspace& ws, const Polyline& p, double gamma_max,
                       double angle_slack = 1e-12) {
  if (p.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (distance(p[i], p[i + 1]) < kEpsGeom) return false;
    if (!ws.segment_free({p[i], p[i + 1]})) return false;
  }
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (turning_angle(p[i - 1], p[i], p[i + 1]) > gamma_max + angle_slack) return false;
  }
  return true;
}

/**
 * @brief Greedy shortcutting of a waypoint path to an order-preserving
 * subsequence.
 *
 * From the current tail, candidates are scanned from the goal end backwards
 * so the first admissible hit is the farthest shortcut. A jump is admissible
 * when the connecting segment is collision-free and the turning angle at the
 * tail (between its committed incoming segment and the jump) stays within
 * gamma_max. A jump whose continuation later dead-ends is rolled back and
 * the next-nearest candidate is tried, so the result is always a valid path;
 * following the original waypoints one by one is admissible from any
 * consistent state, which guarantees termination with a result.
 *
 * The output is never longer than the input: replacing a subchain by its
 * direct segment cannot increase length (triangle inequality).
 *
 * @throws NoProgress only if the input violates the path invariants.
 */
inline Polyline reduce_nodes(const Workspace& ws, const Polyline& path, double gamma_max) {
  if (path.size() <= 2) return path;
  const int last = static_cast<int>(path.size()) - 1;

  const auto jump_ok = [&](int before_tail, int tail, int cand) {
    if (distance(path[static_cast<std::size_t>(tail)], path[static_cast<std::size_t>(cand)]) <
        kEpsGeom) {
      return false;
    }
    if (!ws.segment_free({path[static_cast<std::size_t>(tail)],
                          path[static_cast<std::size_t>(cand)]})) {
      return false;
    }
    if (before_tail >= 0) {
      return turning_angle(path[static_cast<std::size_t>(before_tail)],
                           path[static_cast<std::size_t>(tail)],
                           path[static_cast<std::size_t>(cand)]) <= gamma_max;
    }
    return true;
  };

  std::vector<int> chosen{0};
  std::vector<int> scan{last};  // per level: next candidate index to try
  while (chosen.back() != last) {
    const int tail = chosen.back();
    const int before = chosen.size() >= 2 ? chosen[chosen.size() - 2] : -1;
    int found = -1;
    for (int j = scan.back(); j > tail; --j) {
      if (jump_ok(before, tail, j)) {
        found = j;
        break;
      }
    }
    if (found >= 0) {
      scan.back() = found - 1;  // resume point if this choice dead-ends
      chosen.push_back(found);
      scan.push_back(last);
    } else {
      if (chosen.size() == 1) {
        throw NoProgress("reduce_nodes: no admissible continuation from the start");
      }
      chosen.pop_back();
      scan.pop_back();
    }
  }

  Polyline out;
  out.reserve(chosen.size());
  for (const int idx : chosen) {
    out.push_back(path[static_cast<std::size_t>(idx)]);
  }
  return out;
}

/**
 * @brief Quadratic Bezier replacing the corner at P_k, clipped to its safe
 * zone.
 *
 * entry and exit sit on the incident segments at distance `clip` from the
 * corner, where clip = min(safe zone radius, half of each incident segment);
 * the halves keep neighboring corner curves from overlapping.
 */
struct CornerCurve {
  Vec2 corner;        // P_k, also the middle control point M_k
  Vec2 entry;         // M_{k-1}, on segment prev->corner
  Vec2 exit;          // M_{k+1}, on segment corner->next
  double safe_radius; // R_k, clearance at the corner
  double clip;        // t_k = |corner - entry| = |corner - exit|
};

/// @throws PointInCollision if the corner has no positive clearance;
/// @throws DegenerateSegment if the corner's incident segments are degenerate.
inline CornerCurve build_corner(const Workspace& ws, const Vec2& prev, const Vec2& corner,
                                const Vec2& next) {
  const double d_in = distance(prev, corner);
  const double d_out = distance(corner, next);
  if (d_in < kEpsGeom || d_out < kEpsGeom || distance(prev, next) < kEpsGeom) {
    throw DegenerateSegment("build_corner: corner points must be pairwise distinct");
  }
  const double radius = ws.clearance(corner);
  const double clip = std::min({radius, 0.5 * d_in, 0.5 * d_out});
  CornerCurve c;
  c.corner = corner;
  c.entry = corner + (prev - corner) * (clip / d_in);
  c.exit = corner + (next - corner) * (clip / d_out);
  c.safe_radius = radius;
  c.clip = clip;
  return c;
}

/// B(tau) = (1-tau)^2 entry + 2 tau (1-tau) corner + tau^2 exit.
inline Vec2 bezier_eval(const CornerCurve& c, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw OutOfRange("bezier_eval: parameter outside [0, 1]");
  }
  const double u = 1.0 - tau;
  return c.entry * (u * u) + c.corner * (2.0 * u * tau) + c.exit * (tau * tau);
}

struct SmoothedPath {
  Polyline source;                  // the waypoint path that was smoothed
  std::vector<CornerCurve> curves;  // one per non-degenerate interior corner
  Polyline samples;                 // discretized full path, start..goal
  double arc_length = 0.0;          // polyline length of samples
};

/// Turning angles below this are treated as straight-line continuations and
/// get no corner curve.
inline constexpr double kDegenerateCornerAngle = 1e-6;

/**
 * @brief Replace each interior corner by a safe-zone-clipped quadratic
 * Bezier and discretize.
 *
 * Consecutive curves are joined by the straight connectors that remain of
 * the original segments. samples_per_curve points are placed uniformly in
 * the curve parameter.
 *
 * @throws OutOfRange for samples_per_curve < 2; propagates PointInCollision
 * from corner construction.
 */
inline SmoothedPath smooth(const Workspace& ws, const Polyline& path, int samples_per_curve) {
  if (samples_per_curve < 2) {
    throw OutOfRange("smooth: samples_per_curve must be >= 2");
  }
  if (path.size() < 2) {
    throw InvalidScenario("smooth: path needs at least two waypoints");
  }

  SmoothedPath out;
  out.source = path;

  Polyline raw;
  raw.push_back(path.front());
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const double corner_angle = turning_angle(path[k - 1], path[k], path[k + 1]);
    if (corner_angle < kDegenerateCornerAngle) {
      raw.push_back(path[k]);  // effectively straight: keep the waypoint
      continue;
    }
    const CornerCurve curve = build_corner(ws, path[k - 1], path[k], path[k + 1]);
    out.curves.push_back(curve);
    for (int i = 0; i < samples_per_curve; ++i) {
      const double tau = static_cast<double>(i) / (samples_per_curve - 1);
      raw.push_back(bezier_eval(curve, tau));
    }
  }
  raw.push_back(path.back());

  // Zero-length steps appear where a curve endpoint coincides with a
  // waypoint or with the next curve's entry; collapse them.
  out.samples.reserve(raw.size());
  for (const Vec2& p : raw) {
    if (out.samples.empty() || distance(out.samples.back(), p) >= kEpsGeom) {
      out.samples.push_back(p);
    } else if (&p == &raw.back()) {
      // Keep the exact goal position as the final sample.
      out.samples.back() = p;
    }
  }
  out.arc_length = polyline_length(out.samples);
  return out;
}

}  // namespace mgrrt
