// Acceptance suite: exercises the full pipeline through the CLI and the
// library, one pass/fail line per criterion. Invoke as
//   acceptance <cli-binary> <scenario-dir>
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mgrrt/bench.hpp"
#include "mgrrt/dynamics.hpp"
#include "mgrrt/result.hpp"
#include "mgrrt/scenario.hpp"

namespace fs = std::filesystem;
using namespace mgrrt;

namespace {

std::string g_cli;
std::string g_scenario_dir;
fs::path g_tmp;
int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s — %s\n", index, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

int run_cli(const std::string& args, const std::string& log_name) {
  const std::string cmd =
      "cd " + g_tmp.string() + " && " + g_cli + " " + args + " > " + log_name + " 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedRun {
  std::string file;  // relative to g_tmp
  RunResult result;
  int exit_code = 0;
};

std::vector<LoadedRun> g_runs;        // criterion 2 outputs, reused by 3a/4/5/6/9
std::vector<std::string> g_run_files; // files produced by criteria 2 and 7

// --- criterion 3b instance family -------------------------------------------
// Detour around a single circular obstacle: waypoints uniformly spaced on an
// arc at constant margin outside the circle. Visibility between waypoints is
// capped by the circle and identical everywhere on the arc, and chord length
// is concave in the arc span, so the farthest-first shortcut pattern is the
// length-optimal subsequence; the exhaustive oracle verifies it from scratch.
struct ArcInstance {
  Workspace ws;
  Polyline path;
  double gamma_max = 0.0;
};

ArcInstance make_arc_instance(std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    const double obstacle_radius = 20.0 + 40.0 * rng.uniform01();
    const double margin = 8.0 + 20.0 * rng.uniform01();
    const double arc_radius = obstacle_radius + margin;
    const double spacing = deg_to_rad(8.0 + 12.0 * rng.uniform01());
    const int waypoints = 6 + static_cast<int>(3.0 * rng.uniform01());  // 6..8
    const Vec2 center{300.0 + 100.0 * (rng.uniform01() - 0.5),
                      300.0 + 100.0 * (rng.uniform01() - 0.5)};
    const double phase = 2.0 * std::numbers::pi * rng.uniform01();

    // Longest chord that still clears the circle, in spacing units.
    const int cap = static_cast<int>(
        std::floor(2.0 / spacing * std::acos(obstacle_radius / arc_radius)));
    if (cap < 2 || cap >= waypoints - 1) continue;            // needs real shortcutting
    if (cap * spacing > deg_to_rad(70.0)) continue;           // angle gate must not bind

    Polyline path;
    for (int i = 0; i < waypoints; ++i) {
      const double a = phase + i * spacing;
      path.push_back({center.x + arc_radius * std::cos(a),
                      center.y + arc_radius * std::sin(a)});
    }
    ArcInstance inst{Workspace{{{0, 0}, {600, 600}}, {CircleObstacle{center, obstacle_radius}}, 0.0},
                     std::move(path), deg_to_rad(75.0)};
    if (!path_valid(inst.ws, inst.path, inst.gamma_max)) continue;
    return inst;
  }
}

double brute_force_optimum(const Workspace& ws, const Polyline& path, double gamma_max) {
  const std::size_t interior = path.size() - 2;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
    Polyline cand;
    cand.push_back(path.front());
    for (std::size_t i = 0; i < interior; ++i) {
      if (mask & (1u << i)) cand.push_back(path[i + 1]);
    }
    cand.push_back(path.back());
    if (path_valid(ws, cand, gamma_max)) best = std::min(best, polyline_length(cand));
  }
  return best;
}

// -----------------------------------------------------------------------------

void criterion_1_dynamics() {
  // Independent hand evaluation of the closed-form chain.
  const double m = 1.50, g = 9.81, vx = 8.0, ct = 2.9e-5, cf = 1.1e-6, omega = 1000.0;
  const double f_max = 4.0 * ct * omega * omega;
  const double budget = f_max * f_max - cf * cf * vx * vx - m * m * g * g;
  const double hand_gamma = std::sqrt(budget) / (m * vx * vx);
  const double hand_radius = m * vx * vx / std::sqrt(budget);

  const UavParams params{};
  const double got_gamma = gamma_max(params);
  const double got_radius = turning_radius(params, max_total_thrust(params));

  const bool pass = std::abs(got_gamma - 1.1985) <= 1e-3 &&
                    std::abs(got_radius - 0.8344) <= 1e-3 &&
                    std::abs(got_gamma - hand_gamma) <= 1e-12 &&
                    std::abs(got_radius - hand_radius) <= 1e-12;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "capability %.5f 1/m (reads as %.3f deg), radius %.5f m; configured bound "
                "75 deg is a config default, not the derived value",
                got_gamma, rad_to_deg(got_gamma), got_radius);
  report(1, "dynamics derivation", pass, detail);
}

void criterion_2_planning_success() {
  int runs = 0, full_success = 0, violations = 0, slow = 0;
  double worst_time = 0.0;
  for (int s = 1; s <= 4; ++s) {
    const std::string scenario = g_scenario_dir + "/scenario" + std::to_string(s) + ".json";
    const Scenario sc = load_scenario(scenario);
    const Workspace ws = sc.workspace();
    const double gm = sc.planner_config().gamma_max;
    for (int seed = 1; seed <= 10; ++seed) {
      const std::string out = "c2_s" + std::to_string(s) + "_seed" + std::to_string(seed) + ".json";
      const int code = run_cli("plan " + scenario + " --seed " + std::to_string(seed) + " -o " +
                                   out,
                               out + ".log");
      ++runs;
      LoadedRun run;
      run.file = out;
      run.exit_code = code;
      run.result = load_result((g_tmp / out).string());
      if (code == 0 && run.result.all_reached()) ++full_success;
      for (const auto& goal : run.result.goals) {
        if (!goal.reached) continue;
        if (!path_valid(ws, goal.raw_path, gm)) ++violations;
        if (!path_valid(ws, goal.reduced_path, gm)) ++violations;
      }
      worst_time = std::max(worst_time, run.result.timings.total);
      if (run.result.timings.total >= 2.0) ++slow;
      g_runs.push_back(std::move(run));
      g_run_files.push_back(out);
    }
  }
  const double rate = 100.0 * full_success / runs;
  const bool pass = rate >= 95.0 && violations == 0 && slow == 0;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "%d/%d runs reached all goals (%.1f%%), %d post-hoc violations, worst "
                "pipeline time %.4f s",
                full_success, runs, rate, violations, worst_time);
  report(2, "planning success", pass, detail);
}

void criterion_3_node_reduction() {
  int paths = 0, monotone_fail = 0, idempotent_fail = 0;
  for (const LoadedRun& run : g_runs) {
    const Workspace ws = run.result.scenario.workspace();
    const double gm = run.result.scenario.planner_config().gamma_max;
    for (const auto& goal : run.result.goals) {
      if (!goal.reached) continue;
      ++paths;
      const Polyline once = reduce_nodes(ws, goal.raw_path, gm);
      if (polyline_length(once) > polyline_length(goal.raw_path) + 1e-9) ++monotone_fail;
      if (reduce_nodes(ws, once, gm) != once) ++idempotent_fail;
    }
  }

  int optimal = 0;
  const int instances = 20;
  for (std::uint64_t seed = 1; seed <= instances; ++seed) {
    const ArcInstance inst = make_arc_instance(seed);
    const Polyline reduced = reduce_nodes(inst.ws, inst.path, inst.gamma_max);
    const double optimum = brute_force_optimum(inst.ws, inst.path, inst.gamma_max);
    if (std::abs(polyline_length(reduced) - optimum) <= 1e-9) ++optimal;
  }

  const bool pass =
      paths >= 100 && monotone_fail == 0 && idempotent_fail == 0 && optimal == instances;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "%d seeded paths: 0 required, got %d length increases, %d idempotence breaks; "
                "%d/%d small detour instances match the exhaustive optimum",
                paths, monotone_fail, idempotent_fail, optimal, instances);
  report(3, "node reduction", pass, detail);
}

void criterion_4_safe_zone() {
  int corners = 0, radius_fail = 0, clearance_fail = 0;
  for (const LoadedRun& run : g_runs) {
    const Workspace ws = run.result.scenario.workspace();
    const int samples_per_curve = run.result.scenario.smoothing.samples_per_curve;
    for (const auto& goal : run.result.goals) {
      if (!goal.reached) continue;
      const SmoothedPath sp = smooth(ws, goal.reduced_path, samples_per_curve);
      for (const CornerCurve& c : sp.curves) {
        ++corners;
        for (int i = 0; i <= 1000; ++i) {
          const Vec2 p = bezier_eval(c, i / 1000.0);
          if (distance(p, c.corner) > c.safe_radius + 1e-9) {
            ++radius_fail;
            break;
          }
          if (ws.signed_clearance(p) < 0.0) {
            ++clearance_fail;
            break;
          }
        }
      }
    }
  }
  const bool pass = corners > 0 && radius_fail == 0 && clearance_fail == 0;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "%d corner curves x 1000 samples: %d outside the safe zone, %d with negative "
                "clearance",
                corners, radius_fail, clearance_fail);
  report(4, "safe-zone containment", pass, detail);
}

void criterion_5_turning_feasibility() {
  int corners = 0, rotation_fail = 0, monotone_fail = 0, chord_fail = 0, gate_fail = 0;
  for (const LoadedRun& run : g_runs) {
    const Workspace ws = run.result.scenario.workspace();
    const double gm = run.result.scenario.planner_config().gamma_max;
    const int samples_per_curve = run.result.scenario.smoothing.samples_per_curve;
    for (const auto& goal : run.result.goals) {
      if (!goal.reached) continue;
      const SmoothedPath sp = smooth(ws, goal.reduced_path, samples_per_curve);
      for (const CornerCurve& c : sp.curves) {
        ++corners;
        const Vec2 e1 = c.corner - c.entry;
        const Vec2 e2 = c.exit - c.corner;
        const double corner_angle = turning_angle(c.entry, c.corner, c.exit);
        if (corner_angle > gm + 1e-9) ++gate_fail;
        const double sign = e1.cross(e2) >= 0 ? 1.0 : -1.0;
        double prev = 0.0;
        bool monotone = true;
        for (int i = 0; i <= 1000; ++i) {
          const double tau = i / 1000.0;
          const Vec2 tangent = e1 * (2.0 * (1.0 - tau)) + e2 * (2.0 * tau);
          const double rotated = sign * std::atan2(e1.cross(tangent), e1.dot(tangent));
          if (rotated < prev - 1e-12) monotone = false;
          prev = rotated;
        }
        if (!monotone) ++monotone_fail;
        if (std::abs(prev - corner_angle) > 1e-9) ++rotation_fail;

        // Chord-to-chord turns along the uniform discretization.
        Polyline chords;
        for (int i = 0; i < samples_per_curve; ++i) {
          chords.push_back(bezier_eval(c, static_cast<double>(i) / (samples_per_curve - 1)));
        }
        for (std::size_t j = 1; j + 1 < chords.size(); ++j) {
          if (turning_angle(chords[j - 1], chords[j], chords[j + 1]) >= corner_angle) {
            ++chord_fail;
            break;
          }
        }
      }
    }
  }
  const bool pass =
      corners > 0 && rotation_fail == 0 && monotone_fail == 0 && chord_fail == 0 && gate_fail == 0;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "%d corners: %d non-monotone rotations, %d total-rotation errors beyond 1e-9, "
                "%d chord turns >= corner angle, %d corners beyond the gate",
                corners, monotone_fail, rotation_fail, chord_fail, gate_fail);
  report(5, "turning feasibility", pass, detail);
}

void criterion_6_simultaneous_arrival() {
  int missions = 0;
  double worst = 0.0;
  for (const LoadedRun& run : g_runs) {
    if (!run.result.metrics) continue;
    ++missions;
    for (const auto& goal : run.result.goals) {
      if (!goal.reached) continue;
      const double dev =
          std::abs(goal.smoothed_length / goal.speed - run.result.arrival_time) /
          run.result.arrival_time;
      worst = std::max(worst, dev);
    }
  }
  const bool pass = missions > 0 && worst <= 1e-9;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d missions, worst relative arrival deviation %.3e",
                missions, worst);
  report(6, "simultaneous arrival", pass, detail);
}

void criterion_7_scalability() {
  const std::string scenario = g_scenario_dir + "/scalability.json";
  const Scenario full = load_scenario(scenario);
  Scenario three = full;
  three.goals.resize(3);
  save_scenario(three, (g_tmp / "scalability3.json").string());

  std::vector<double> t10, t3;
  bool all_reached = true;
  for (int seed = 1; seed <= 10; ++seed) {
    const std::string out10 = "c7_full_seed" + std::to_string(seed) + ".json";
    const std::string out3 = "c7_three_seed" + std::to_string(seed) + ".json";
    const int code10 = run_cli("plan " + scenario + " --seed " + std::to_string(seed) + " -o " +
                                   out10,
                               out10 + ".log");
    const int code3 = run_cli("plan scalability3.json --seed " + std::to_string(seed) + " -o " +
                                  out3,
                              out3 + ".log");
    all_reached = all_reached && code10 == 0 && code3 == 0;
    t10.push_back(load_result((g_tmp / out10).string()).timings.plan);
    t3.push_back(load_result((g_tmp / out3).string()).timings.plan);
    g_run_files.push_back(out10);
    g_run_files.push_back(out3);
  }
  const double med10 = summarize(t10).median;
  const double med3 = summarize(t3).median;
  const double ratio = med10 / med3;
  const bool pass = all_reached && ratio <= 2.0;
  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "median plan time %.3f ms for 10 goals vs %.3f ms for 3 goals (ratio %.2f, "
                "bound 2.0), all goals reached: %s",
                med10 * 1e3, med3 * 1e3, ratio, all_reached ? "yes" : "no");
  report(7, "scalability trend", pass, detail);
}

void criterion_8_determinism() {
  const std::string scenario = g_scenario_dir + "/scenario2.json";
  const int a = run_cli("plan " + scenario + " --seed 9 -o det_a.json", "det_a.log");
  const int b = run_cli("plan " + scenario + " --seed 9 -o det_b.json", "det_b.log");
  const nlohmann::json ja = nlohmann::json::parse(slurp(g_tmp / "det_a.json"));
  const nlohmann::json jb = nlohmann::json::parse(slurp(g_tmp / "det_b.json"));
  const bool results_equal =
      a == 0 && b == 0 && strip_timings(ja).dump() == strip_timings(jb).dump();

  const int bs = run_cli("bench " + scenario + " --trials 6 -o det_s.csv --summary det_s.json",
                         "det_bs.log");
  const int bp = run_cli(
      "bench " + scenario + " --trials 6 --parallel -o det_p.csv --summary det_p.json",
      "det_bp.log");
  const auto strip_time_column = [](const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      out += line.substr(0, line.rfind(','));
      out += '\n';
    }
    return out;
  };
  const bool csv_equal = bs == 0 && bp == 0 &&
                         strip_time_column(slurp(g_tmp / "det_s.csv")) ==
                             strip_time_column(slurp(g_tmp / "det_p.csv"));

  const bool pass = results_equal && csv_equal;
  report(8, "determinism", pass,
         std::string("same-seed result files byte-identical up to measured wall times: ") +
             (results_equal ? "yes" : "NO") +
             "; serial and parallel bench rows identical up to the time column: " +
             (csv_equal ? "yes" : "NO"));
}

void criterion_9_self_audit() {
  int audited = 0, failures = 0;
  for (const std::string& file : g_run_files) {
    ++audited;
    if (run_cli("metrics " + file, "audit_" + std::to_string(audited) + ".log") != 0) {
      ++failures;
    }
  }
  const bool pass = audited > 0 && failures == 0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d result files audited, %d mismatches", audited,
                failures);
  report(9, "self-audit", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <cli-binary> <scenario-dir>\n");
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_scenario_dir = fs::absolute(argv[2]).string();
  g_tmp = fs::absolute("acceptance_tmp");
  fs::remove_all(g_tmp);
  fs::create_directories(g_tmp);

  const auto guarded = [](int index, const char* name, void (*fn)()) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(index, name, false, std::string("exception: ") + e.what());
    }
  };
  guarded(1, "dynamics derivation", criterion_1_dynamics);
  guarded(2, "planning success", criterion_2_planning_success);
  guarded(3, "node reduction", criterion_3_node_reduction);
  guarded(4, "safe-zone containment", criterion_4_safe_zone);
  guarded(5, "turning feasibility", criterion_5_turning_feasibility);
  guarded(6, "simultaneous arrival", criterion_6_simultaneous_arrival);
  guarded(7, "scalability trend", criterion_7_scalability);
  guarded(8, "determinism", criterion_8_determinism);
  guarded(9, "self-audit", criterion_9_self_audit);

  std::printf("ACCEPTANCE: %d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
