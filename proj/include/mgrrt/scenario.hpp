#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgrrt/dynamics.hpp"
#include "mgrrt/environment.hpp"
#include "mgrrt/planner.hpp"

namespace mgrrt {

/// Planner settings as they appear in a scenario file. Angles are stored in
/// degrees on disk and converted at the point of use, so a parse/serialize
/// round trip is exact.
struct PlannerSettings {
  double step = 50.0;
  int max_iterations = 5000;
  double gamma_max_deg = 75.0;
  std::uint64_t seed = 0;
};

struct SmoothingSettings {
  int samples_per_curve = 20;
};

struct MissionSettings {
  double altitude_base = 5.0;
  double altitude_step = 5.0;
};

/// In-memory form of a scenario file.
struct Scenario {
  Rect bounds{{0, 0}, {500, 500}};
  Vec2 start{0, 0};
  std::vector<Vec2> goals;
  std::vector<Obstacle> obstacles;
  UavParams uav{};
  PlannerSettings planner{};
  SmoothingSettings smoothing{};
  MissionSettings mission{};

  Workspace workspace() const { return Workspace{bounds, obstacles, uav.uav_radius}; }

  PlannerConfig planner_config() const {
    PlannerConfig cfg;
    cfg.step = planner.step;
    cfg.max_iterations = planner.max_iterations;
    cfg.gamma_max = deg_to_rad(planner.gamma_max_deg);
    cfg.seed = planner.seed;
    return cfg;
  }

  /// Semantic validation beyond JSON shape: constructible workspace, valid
  /// UAV parameters and planner settings, start/goals strictly inside the
  /// free space and pairwise distinct.
  void validate() const {
    uav.validate();
    const Workspace ws = workspace();
    planner_config().validate();
    if (smoothing.samples_per_curve < 2) {
      throw InvalidScenario("smoothing.samples_per_curve must be >= 2");
    }
    if (!(mission.altitude_step > 0.0)) {
      throw InvalidScenario("mission.altitude_step must be > 0");
    }
    if (!(mission.altitude_base > 0.0)) {
      throw InvalidScenario("mission.altitude_base must be > 0");
    }
    if (goals.empty()) throw InvalidScenario("goals: at least one goal is required");
    if (!ws.point_free(start)) {
      throw InvalidScenario("start: not strictly inside the free space");
    }
    for (std::size_t i = 0; i < goals.size(); ++i) {
      const std::string at = "goals[" + std::to_string(i) + "]";
      if (!ws.point_free(goals[i])) {
        throw InvalidScenario(at + ": not strictly inside the free space");
      }
      if (distance(goals[i], start) < kEpsGeom) {
        throw InvalidScenario(at + ": coincides with start");
      }
      for (std::size_t j = i + 1; j < goals.size(); ++j) {
        if (distance(goals[i], goals[j]) < kEpsGeom) {
          throw InvalidScenario(at + ": coincides with goals[" + std::to_string(j) + "]");
        }
      }
    }
  }
};

namespace jsonio {

using nlohmann::json;

inline const json& require_field(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw InvalidScenario("'" + at + "' must be an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InvalidScenario("missing field '" + (at.empty() ? key : at + "." + key) + "'");
  }
  return *it;
}

inline double as_number(const json& j, const std::string& at) {
  if (!j.is_number()) throw InvalidScenario("field '" + at + "' must be a number");
  return j.get<double>();
}

inline int as_int(const json& j, const std::string& at) {
  if (!j.is_number_integer()) throw InvalidScenario("field '" + at + "' must be an integer");
  return j.get<int>();
}

inline std::uint64_t as_seed(const json& j, const std::string& at) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) {
    throw InvalidScenario("field '" + at + "' must be an integer");
  }
  return j.get<std::uint64_t>();
}

inline Vec2 as_point(const json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidScenario("field '" + at + "' must be a [x, y] pair");
  }
  return {as_number(j[0], at + "[0]"), as_number(j[1], at + "[1]")};
}

inline json point_to_json(const Vec2& p) { return json::array({p.x, p.y}); }

inline double opt_number(const json& j, const std::string& key, const std::string& at,
                         double fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return as_number(j.at(key), at + "." + key);
}

}  // namespace jsonio

inline Scenario scenario_from_json(const nlohmann::json& j) {
  using namespace jsonio;
  if (!j.is_object()) throw InvalidScenario("scenario: top level must be an object");
  const int version = as_int(require_field(j, "version", ""), "version");
  if (version != 1) throw InvalidScenario("version: expected 1");

  Scenario sc;
  const json& bounds = require_field(j, "bounds", "");
  sc.bounds.lo = as_point(require_field(bounds, "min", "bounds"), "bounds.min");
  sc.bounds.hi = as_point(require_field(bounds, "max", "bounds"), "bounds.max");
  sc.start = as_point(require_field(j, "start", ""), "start");

  const json& goals = require_field(j, "goals", "");
  if (!goals.is_array() || goals.empty()) {
    throw InvalidScenario("field 'goals' must be a non-empty array");
  }
  for (std::size_t i = 0; i < goals.size(); ++i) {
    sc.goals.push_back(as_point(goals[i], "goals[" + std::to_string(i) + "]"));
  }

  if (j.contains("obstacles")) {
    const json& obs = j.at("obstacles");
    if (!obs.is_array()) throw InvalidScenario("field 'obstacles' must be an array");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const std::string at = "obstacles[" + std::to_string(i) + "]";
      const json& o = obs[i];
      const json& type = require_field(o, "type", at);
      if (!type.is_string()) throw InvalidScenario("field '" + at + ".type' must be a string");
      const std::string kind = type.get<std::string>();
      if (kind == "circle") {
        CircleObstacle c;
        c.center = as_point(require_field(o, "center", at), at + ".center");
        c.radius = as_number(require_field(o, "radius", at), at + ".radius");
        sc.obstacles.emplace_back(c);
      } else if (kind == "rect") {
        RectObstacle r;
        r.box.lo = as_point(require_field(o, "min", at), at + ".min");
        r.box.hi = as_point(require_field(o, "max", at), at + ".max");
        sc.obstacles.emplace_back(r);
      } else {
        throw InvalidScenario("field '" + at + ".type' must be 'circle' or 'rect'");
      }
    }
  }

  if (j.contains("uav")) {
    const json& u = j.at("uav");
    sc.uav.mass = opt_number(u, "mass", "uav", sc.uav.mass);
    sc.uav.gravity = opt_number(u, "gravity", "uav", sc.uav.gravity);
    sc.uav.forward_speed = opt_number(u, "forward_speed", "uav", sc.uav.forward_speed);
    sc.uav.thrust_coeff = opt_number(u, "thrust_coeff", "uav", sc.uav.thrust_coeff);
    sc.uav.friction_coeff = opt_number(u, "friction_coeff", "uav", sc.uav.friction_coeff);
    sc.uav.max_motor_speed = opt_number(u, "max_motor_speed", "uav", sc.uav.max_motor_speed);
    sc.uav.uav_radius = opt_number(u, "radius", "uav", sc.uav.uav_radius);
  }

  if (j.contains("planner")) {
    const json& p = j.at("planner");
    sc.planner.step = opt_number(p, "step", "planner", sc.planner.step);
    if (p.contains("max_iterations")) {
      sc.planner.max_iterations = as_int(p.at("max_iterations"), "planner.max_iterations");
    }
    sc.planner.gamma_max_deg =
        opt_number(p, "gamma_max_deg", "planner", sc.planner.gamma_max_deg);
    if (p.contains("seed")) sc.planner.seed = as_seed(p.at("seed"), "planner.seed");
  }

  if (j.contains("smoothing")) {
    const json& s = j.at("smoothing");
    if (s.contains("samples_per_curve")) {
      sc.smoothing.samples_per_curve =
          as_int(s.at("samples_per_curve"), "smoothing.samples_per_curve");
    }
  }

  if (j.contains("mission")) {
    const json& m = j.at("mission");
    sc.mission.altitude_base = opt_number(m, "altitude_base", "mission", sc.mission.altitude_base);
    sc.mission.altitude_step = opt_number(m, "altitude_step", "mission", sc.mission.altitude_step);
  }

  sc.validate();
  return sc;
}

inline nlohmann::json scenario_to_json(const Scenario& sc) {
  using nlohmann::json;
  json j;
  j["version"] = 1;
  j["bounds"] = {{"min", jsonio::point_to_json(sc.bounds.lo)},
                 {"max", jsonio::point_to_json(sc.bounds.hi)}};
  j["start"] = jsonio::point_to_json(sc.start);
  json goals = json::array();
  for (const Vec2& g : sc.goals) goals.push_back(jsonio::point_to_json(g));
  j["goals"] = goals;
  json obstacles = json::array();
  for (const Obstacle& ob : sc.obstacles) {
    if (const auto* c = std::get_if<CircleObstacle>(&ob)) {
      obstacles.push_back({{"type", "circle"},
                           {"center", jsonio::point_to_json(c->center)},
                           {"radius", c->radius}});
    } else {
      const Rect& r = std::get<RectObstacle>(ob).box;
      obstacles.push_back({{"type", "rect"},
                           {"min", jsonio::point_to_json(r.lo)},
                           {"max", jsonio::point_to_json(r.hi)}});
    }
  }
  j["obstacles"] = obstacles;
  j["uav"] = {{"mass", sc.uav.mass},
              {"gravity", sc.uav.gravity},
              {"forward_speed", sc.uav.forward_speed},
              {"thrust_coeff", sc.uav.thrust_coeff},
              {"friction_coeff", sc.uav.friction_coeff},
              {"max_motor_speed", sc.uav.max_motor_speed},
              {"radius", sc.uav.uav_radius}};
  j["planner"] = {{"step", sc.planner.step},
                  {"max_iterations", sc.planner.max_iterations},
                  {"gamma_max_deg", sc.planner.gamma_max_deg},
                  {"seed", sc.planner.seed}};
  j["smoothing"] = {{"samples_per_curve", sc.smoothing.samples_per_curve}};
  j["mission"] = {{"altitude_base", sc.mission.altitude_base},
                  {"altitude_step", sc.mission.altitude_step}};
  return j;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidScenario("cannot open scenario file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidScenario("scenario is not valid JSON: " + std::string(e.what()));
  }
  return scenario_from_json(j);
}

inline void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidScenario("cannot write scenario file: " + path);
  out << scenario_to_json(sc).dump(2) << '\n';
}

}  // namespace mgrrt
