#pragma once

#include <algorithm>
#include <vector>

#include "mgrrt/errors.hpp"
#include "mgrrt/geometry.hpp"
#include "mgrrt/planner.hpp"
#include "mgrrt/refine.hpp"

namespace mgrrt {

/// Evaluation metrics over a set of paths.
struct Metrics {
  double mean_path_length = 0.0;   // meters, mean of per-path lengths
  double mean_turning_angle = 0.0; // radians, see smooth_score_metric
  double planning_time = 0.0;      // seconds spent planning
};

struct VelocityAssignment {
  std::vector<double> speeds;  // m/s per path, longest flies at v_max
  double arrival_time = 0.0;   // shared mission time, seconds
};

/**
 * @brief Speeds proportional to path length so all vehicles arrive together.
 *
 * The longest path flies at v_max; every other speed is scaled by its length
 * ratio, making length/speed identical across paths.
 *
 * @throws EmptyInput for an empty length list; InvalidScenario for
 * non-positive lengths or speed.
 */
inline VelocityAssignment assign_velocities(const std::vector<double>& lengths, double v_max) {
  if (lengths.empty()) throw EmptyInput("assign_velocities: no path lengths");
  if (!(v_max > 0.0)) throw InvalidScenario("assign_velocities: v_max must be > 0");
  for (const double len : lengths) {
    if (!(len > 0.0)) throw InvalidScenario("assign_velocities: lengths must be > 0");
  }
  const double longest = *std::max_element(lengths.begin(), lengths.end());
  VelocityAssignment out;
  out.speeds.reserve(lengths.size());
  for (const double len : lengths) {
    out.speeds.push_back(v_max * len / longest);
  }
  out.arrival_time = longest / v_max;
  return out;
}

/// Distinct flight altitudes base, base+step, base+2*step, ...
inline std::vector<double> assign_altitudes(int n, double base, double step) {
  if (n < 1) throw EmptyInput("assign_altitudes: need at least one vehicle");
  if (!(step > 0.0)) throw InvalidScenario("assign_altitudes: step must be > 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(base + i * step);
  }
  return out;
}

/// Mean of per-path polyline lengths. @throws EmptyInput.
inline double path_length_metric(const std::vector<Polyline>& paths) {
  if (paths.empty()) throw EmptyInput("path_length_metric: no paths");
  double sum = 0.0;
  for (const auto& p : paths) {
    if (p.size() < 2) throw InvalidScenario("path_length_metric: path needs >= 2 points");
    sum += polyline_length(p);
  }
  return sum / static_cast<double>(paths.size());
}

/**
 * @brief Smoothness score: mean over paths of the mean interior turning
 * angle per path, radians. Smaller is smoother.
 *
 * Paths with fewer than three points have no interior corner and are left
 * out of the outer mean; if no path has one, the score is 0.
 *
 * @throws EmptyInput for an empty path list.
 */
inline double smooth_score_metric(const std::vector<Polyline>& paths) {
  if (paths.empty()) throw EmptyInput("smooth_score_metric: no paths");
  double sum_of_means = 0.0;
  int counted = 0;
  for (const auto& p : paths) {
    if (p.size() < 3) continue;
    double angle_sum = 0.0;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      angle_sum += turning_angle(p[j - 1], p[j], p[j + 1]);
    }
    sum_of_means += angle_sum / static_cast<double>(p.size() - 2);
    ++counted;
  }
  return counted == 0 ? 0.0 : sum_of_means / counted;
}

/**
 * @brief Metrics for a completed plan over the given final paths.
 * @throws IncompletePlan if any goal is unreached.
 */
inline Metrics compute_metrics(const PlanResult& result, const std::vector<Polyline>& final_paths) {
  if (!result.all_reached()) {
    throw IncompletePlan("compute_metrics: not every goal was reached");
  }
  Metrics m;
  m.mean_path_length = path_length_metric(final_paths);
  m.mean_turning_angle = smooth_score_metric(final_paths);
  m.planning_time = result.wall_time;
  return m;
}

}  // namespace mgrrt
