#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgrrt/mission.hpp"
#include "mgrrt/planner.hpp"
#include "mgrrt/refine.hpp"
#include "mgrrt/scenario.hpp"

namespace mgrrt {

struct GoalOutput {
  bool reached = false;
  Polyline raw_path;
  Polyline reduced_path;
  Polyline smoothed_samples;
  double raw_length = 0.0;
  double reduced_length = 0.0;
  double smoothed_length = 0.0;
  double speed = 0.0;     // m/s, 0 when unreached
  double altitude = 0.0;  // m
};

struct StageTimings {
  double plan = 0.0;    // seconds inside the tree expansion
  double reduce = 0.0;  // seconds spent shortcutting
  double smooth = 0.0;  // seconds spent building and sampling curves
  double total = 0.0;
};

/// Metrics computed over each path representation. The planning time is the
/// same for all three; lengths and angles differ.
struct MetricsTriple {
  Metrics raw;
  Metrics reduced;
  Metrics smoothed;
};

struct RunResult {
  Scenario scenario;  // config echo; re-running with this reproduces the result
  std::uint64_t seed = 0;
  int iterations_used = 0;
  std::vector<GoalOutput> goals;
  double arrival_time = 0.0;                // seconds, over reached goals
  std::optional<MetricsTriple> metrics;     // absent when nothing was reached
  StageTimings timings;
  std::vector<TreeNode> tree;

  bool all_reached() const {
    for (const auto& g : goals) {
      if (!g.reached) return false;
    }
    return !goals.empty();
  }
};

/**
 * @brief Full pipeline: plan, reduce, smooth, assign speeds and altitudes,
 * compute metrics on all three path representations.
 *
 * Metrics and the velocity assignment cover the reached goals only, so a
 * partial plan still yields a usable result (its all_reached() is false).
 */
inline RunResult run_pipeline(const Scenario& scenario,
                              std::optional<std::uint64_t> seed_override = std::nullopt) {
  Scenario sc = scenario;
  if (seed_override) sc.planner.seed = *seed_override;
  sc.validate();

  const auto t_start = std::chrono::steady_clock::now();
  const Workspace ws = sc.workspace();
  const PlannerConfig cfg = sc.planner_config();

  RunResult out;
  out.scenario = sc;
  out.seed = cfg.seed;

  const PlanResult planned = plan(ws, sc.start, sc.goals, cfg);
  out.iterations_used = planned.iterations_used;
  out.tree = planned.tree;
  out.timings.plan = planned.wall_time;

  const auto altitudes =
      assign_altitudes(static_cast<int>(sc.goals.size()), sc.mission.altitude_base,
                       sc.mission.altitude_step);

  out.goals.resize(sc.goals.size());
  const auto t_reduce0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < sc.goals.size(); ++i) {
    GoalOutput& g = out.goals[i];
    g.altitude = altitudes[i];
    g.reached = planned.goals[i].reached;
    if (!g.reached) continue;
    g.raw_path = planned.goals[i].path;
    g.raw_length = polyline_length(g.raw_path);
    g.reduced_path = reduce_nodes(ws, g.raw_path, cfg.gamma_max);
    g.reduced_length = polyline_length(g.reduced_path);
  }
  const auto t_smooth0 = std::chrono::steady_clock::now();
  out.timings.reduce = std::chrono::duration<double>(t_smooth0 - t_reduce0).count();
  for (auto& g : out.goals) {
    if (!g.reached) continue;
    const SmoothedPath sp = smooth(ws, g.reduced_path, sc.smoothing.samples_per_curve);
    g.smoothed_samples = sp.samples;
    g.smoothed_length = sp.arc_length;
  }
  out.timings.smooth =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_smooth0).count();

  std::vector<double> reached_lengths;
  std::vector<Polyline> raw_paths, reduced_paths, smoothed_paths;
  for (const auto& g : out.goals) {
    if (!g.reached) continue;
    reached_lengths.push_back(g.smoothed_length);
    raw_paths.push_back(g.raw_path);
    reduced_paths.push_back(g.reduced_path);
    smoothed_paths.push_back(g.smoothed_samples);
  }
  if (!reached_lengths.empty()) {
    const VelocityAssignment va = assign_velocities(reached_lengths, sc.uav.forward_speed);
    out.arrival_time = va.arrival_time;
    std::size_t vi = 0;
    for (auto& g : out.goals) {
      if (g.reached) g.speed = va.speeds[vi++];
    }
    MetricsTriple mt;
    mt.raw.mean_path_length = path_length_metric(raw_paths);
    mt.raw.mean_turning_angle = smooth_score_metric(raw_paths);
    mt.raw.planning_time = planned.wall_time;
    mt.reduced.mean_path_length = path_length_metric(reduced_paths);
    mt.reduced.mean_turning_angle = smooth_score_metric(reduced_paths);
    mt.reduced.planning_time = planned.wall_time;
    mt.smoothed.mean_path_length = path_length_metric(smoothed_paths);
    mt.smoothed.mean_turning_angle = smooth_score_metric(smoothed_paths);
    mt.smoothed.planning_time = planned.wall_time;
    out.metrics = mt;
  }

  out.timings.total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return out;
}

namespace jsonio {

inline json polyline_to_json(const Polyline& p) {
  json arr = json::array();
  for (const Vec2& v : p) arr.push_back(point_to_json(v));
  return arr;
}

inline Polyline polyline_from_json(const json& j, const std::string& at) {
  if (!j.is_array()) throw InvalidResult("field '" + at + "' must be an array of points");
  Polyline p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidResult("field '" + at + "[" + std::to_string(i) + "]' must be [x, y]");
    }
    p.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return p;
}

inline json metrics_to_json(const Metrics& m) {
  return {{"mean_path_length", m.mean_path_length},
          {"mean_turning_angle", m.mean_turning_angle},
          {"planning_time_s", m.planning_time}};
}

inline Metrics metrics_from_json(const json& j, const std::string& at) {
  Metrics m;
  m.mean_path_length = as_number(require_field(j, "mean_path_length", at), at);
  m.mean_turning_angle = as_number(require_field(j, "mean_turning_angle", at), at);
  m.planning_time = as_number(require_field(j, "planning_time_s", at), at);
  return m;
}

}  // namespace jsonio

inline nlohmann::json result_to_json(const RunResult& r) {
  using nlohmann::json;
  json j;
  j["version"] = 1;
  j["seed"] = r.seed;
  j["iterations_used"] = r.iterations_used;
  j["all_reached"] = r.all_reached();
  j["scenario"] = scenario_to_json(r.scenario);
  json goals = json::array();
  for (const auto& g : r.goals) {
    json gj;
    gj["reached"] = g.reached;
    gj["altitude"] = g.altitude;
    if (g.reached) {
      gj["raw_path"] = jsonio::polyline_to_json(g.raw_path);
      gj["reduced_path"] = jsonio::polyline_to_json(g.reduced_path);
      gj["smoothed_samples"] = jsonio::polyline_to_json(g.smoothed_samples);
      gj["raw_length"] = g.raw_length;
      gj["reduced_length"] = g.reduced_length;
      gj["smoothed_length"] = g.smoothed_length;
      gj["speed"] = g.speed;
    }
    goals.push_back(gj);
  }
  j["goals"] = goals;
  j["arrival_time_s"] = r.arrival_time;
  if (r.metrics) {
    j["metrics"] = {{"raw", jsonio::metrics_to_json(r.metrics->raw)},
                    {"reduced", jsonio::metrics_to_json(r.metrics->reduced)},
                    {"smoothed", jsonio::metrics_to_json(r.metrics->smoothed)}};
  }
  j["timings_s"] = {{"plan", r.timings.plan},
                    {"reduce", r.timings.reduce},
                    {"smooth", r.timings.smooth},
                    {"total", r.timings.total}};
  json tree = json::array();
  for (const TreeNode& n : r.tree) {
    tree.push_back({{"x", n.position.x}, {"y", n.position.y}, {"parent", n.parent},
                    {"goal", n.is_goal}});
  }
  j["tree"] = tree;
  return j;
}

inline RunResult result_from_json(const nlohmann::json& j) {
  using namespace jsonio;
  if (!j.is_object()) throw InvalidResult("result: top level must be an object");
  if (!j.contains("version") || j.at("version") != 1) {
    throw InvalidResult("result: version must be 1");
  }
  RunResult r;
  try {
    r.scenario = scenario_from_json(require_field(j, "scenario", ""));
  } catch (const InvalidScenario& e) {
    throw InvalidResult(std::string("result: embedded scenario invalid: ") + e.what());
  }
  r.seed = as_seed(require_field(j, "seed", ""), "seed");
  r.iterations_used = as_int(require_field(j, "iterations_used", ""), "iterations_used");
  const json& goals = require_field(j, "goals", "");
  if (!goals.is_array() || goals.size() != r.scenario.goals.size()) {
    throw InvalidResult("result: goals array must match the scenario goal count");
  }
  for (std::size_t i = 0; i < goals.size(); ++i) {
    const std::string at = "goals[" + std::to_string(i) + "]";
    const json& gj = goals[i];
    GoalOutput g;
    const json& reached = require_field(gj, "reached", at);
    if (!reached.is_boolean()) throw InvalidResult("field '" + at + ".reached' must be a bool");
    g.reached = reached.get<bool>();
    g.altitude = as_number(require_field(gj, "altitude", at), at + ".altitude");
    if (g.reached) {
      g.raw_path = polyline_from_json(require_field(gj, "raw_path", at), at + ".raw_path");
      g.reduced_path =
          polyline_from_json(require_field(gj, "reduced_path", at), at + ".reduced_path");
      g.smoothed_samples = polyline_from_json(require_field(gj, "smoothed_samples", at),
                                              at + ".smoothed_samples");
      g.raw_length = as_number(require_field(gj, "raw_length", at), at + ".raw_length");
      g.reduced_length =
          as_number(require_field(gj, "reduced_length", at), at + ".reduced_length");
      g.smoothed_length =
          as_number(require_field(gj, "smoothed_length", at), at + ".smoothed_length");
      g.speed = as_number(require_field(gj, "speed", at), at + ".speed");
    }
    r.goals.push_back(std::move(g));
  }
  r.arrival_time = as_number(require_field(j, "arrival_time_s", ""), "arrival_time_s");
  if (j.contains("metrics")) {
    const json& m = j.at("metrics");
    MetricsTriple mt;
    mt.raw = metrics_from_json(require_field(m, "raw", "metrics"), "metrics.raw");
    mt.reduced = metrics_from_json(require_field(m, "reduced", "metrics"), "metrics.reduced");
    mt.smoothed = metrics_from_json(require_field(m, "smoothed", "metrics"), "metrics.smoothed");
    r.metrics = mt;
  }
  const json& t = require_field(j, "timings_s", "");
  r.timings.plan = as_number(require_field(t, "plan", "timings_s"), "timings_s.plan");
  r.timings.reduce = as_number(require_field(t, "reduce", "timings_s"), "timings_s.reduce");
  r.timings.smooth = as_number(require_field(t, "smooth", "timings_s"), "timings_s.smooth");
  r.timings.total = as_number(require_field(t, "total", "timings_s"), "timings_s.total");
  if (j.contains("tree")) {
    const json& tree = j.at("tree");
    if (!tree.is_array()) throw InvalidResult("field 'tree' must be an array");
    for (const auto& nj : tree) {
      TreeNode n;
      n.position = {as_number(require_field(nj, "x", "tree[]"), "tree[].x"),
                    as_number(require_field(nj, "y", "tree[]"), "tree[].y")};
      n.parent = as_int(require_field(nj, "parent", "tree[]"), "tree[].parent");
      n.is_goal = require_field(nj, "goal", "tree[]").get<bool>();
      r.tree.push_back(n);
    }
  }
  return r;
}

inline RunResult load_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidResult("cannot open result file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidResult("result is not valid JSON: " + std::string(e.what()));
  }
  return result_from_json(j);
}

inline void save_result(const RunResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidResult("cannot write result file: " + path);
  out << result_to_json(r).dump(2) << '\n';
}

/**
 * @brief Self-audit: recompute everything derivable from the embedded paths
 * and compare against the embedded values.
 *
 * Lengths, metrics, speeds, and the arrival time must reproduce exactly
 * (identical code path, identical doubles after the JSON round trip); the
 * simultaneous-arrival identity is checked to 1e-9 relative. Planning time
 * is a measurement and is only checked for internal consistency.
 *
 * @throws MetricsMismatch on the first discrepancy.
 */
inline void audit_result(const RunResult& r) {
  const auto fail = [](const std::string& what) { throw MetricsMismatch("self-audit: " + what); };

  std::vector<Polyline> raw_paths, reduced_paths, smoothed_paths;
  std::vector<double> lengths;
  for (std::size_t i = 0; i < r.goals.size(); ++i) {
    const GoalOutput& g = r.goals[i];
    if (!g.reached) continue;
    const std::string at = "goals[" + std::to_string(i) + "]";
    if (polyline_length(g.raw_path) != g.raw_length) fail(at + ".raw_length");
    if (polyline_length(g.reduced_path) != g.reduced_length) fail(at + ".reduced_length");
    if (polyline_length(g.smoothed_samples) != g.smoothed_length) fail(at + ".smoothed_length");
    raw_paths.push_back(g.raw_path);
    reduced_paths.push_back(g.reduced_path);
    smoothed_paths.push_back(g.smoothed_samples);
    lengths.push_back(g.smoothed_length);
  }

  if (raw_paths.empty()) {
    if (r.metrics) fail("metrics present although no goal was reached");
    return;
  }
  if (!r.metrics) fail("metrics missing although goals were reached");

  const auto check_metrics = [&](const Metrics& m, const std::vector<Polyline>& paths,
                                 const std::string& at) {
    if (path_length_metric(paths) != m.mean_path_length) fail(at + ".mean_path_length");
    if (smooth_score_metric(paths) != m.mean_turning_angle) fail(at + ".mean_turning_angle");
    if (m.planning_time != r.timings.plan) fail(at + ".planning_time_s");
  };
  check_metrics(r.metrics->raw, raw_paths, "metrics.raw");
  check_metrics(r.metrics->reduced, reduced_paths, "metrics.reduced");
  check_metrics(r.metrics->smoothed, smoothed_paths, "metrics.smoothed");

  const VelocityAssignment va = assign_velocities(lengths, r.scenario.uav.forward_speed);
  if (va.arrival_time != r.arrival_time) fail("arrival_time_s");
  std::size_t vi = 0;
  for (std::size_t i = 0; i < r.goals.size(); ++i) {
    if (!r.goals[i].reached) continue;
    if (va.speeds[vi] != r.goals[i].speed) {
      fail("goals[" + std::to_string(i) + "].speed");
    }
    const double t = lengths[vi] / r.goals[i].speed;
    if (std::abs(t - r.arrival_time) / r.arrival_time > 1e-9) {
      fail("goals[" + std::to_string(i) + "]: arrival time deviates beyond 1e-9 relative");
    }
    ++vi;
  }
}

/// Copy of a result JSON with measured wall times zeroed, for byte
/// comparisons across reruns of the same seed.
inline nlohmann::json strip_timings(nlohmann::json j) {
  if (j.contains("timings_s")) {
    for (auto& [key, value] : j.at("timings_s").items()) value = 0.0;
  }
  if (j.contains("metrics")) {
    for (auto& [key, value] : j.at("metrics").items()) value["planning_time_s"] = 0.0;
  }
  return j;
}

}  // namespace mgrrt
