#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "mgrrt/bench.hpp"
#include "mgrrt/dynamics.hpp"
#include "mgrrt/result.hpp"
#include "mgrrt/scenario.hpp"
#include "mgrrt/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitPartialPlan = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitAuditMismatch = 4;

// Default outputs land in $MGRRT_OUT_DIR (falling back to the working
// directory) unless -o is given.
std::string default_out(const std::string& filename) {
  const char* dir = std::getenv("MGRRT_OUT_DIR");
  const std::filesystem::path base = (dir && *dir) ? dir : ".";
  return (base / filename).string();
}

void print_metrics(const char* label, const mgrrt::Metrics& m) {
  std::cout << "  " << std::left << std::setw(9) << label
            << " mean length " << std::setw(10) << m.mean_path_length
            << " m   mean turn " << std::setw(12) << m.mean_turning_angle
            << " rad   plan time " << m.planning_time << " s\n";
}

int do_plan(const std::string& scenario_path, std::string out_path,
            std::optional<std::uint64_t> seed) {
  const mgrrt::Scenario sc = mgrrt::load_scenario(scenario_path);
  const mgrrt::RunResult result = mgrrt::run_pipeline(sc, seed);
  if (out_path.empty()) out_path = default_out("result.json");
  mgrrt::save_result(result, out_path);

  std::cout << "scenario: " << scenario_path << "\nseed: " << result.seed
            << "\niterations: " << result.iterations_used << "\n";
  for (std::size_t i = 0; i < result.goals.size(); ++i) {
    const auto& g = result.goals[i];
    std::cout << "goal " << (i + 1) << ": ";
    if (g.reached) {
      std::cout << "reached  raw " << g.raw_length << " m -> reduced " << g.reduced_length
                << " m -> smoothed " << g.smoothed_length << " m  speed " << g.speed
                << " m/s  altitude " << g.altitude << " m\n";
    } else {
      std::cout << "UNREACHED\n";
    }
  }
  if (result.metrics) {
    std::cout << "arrival time: " << result.arrival_time << " s\nmetrics:\n";
    print_metrics("raw", result.metrics->raw);
    print_metrics("reduced", result.metrics->reduced);
    print_metrics("smoothed", result.metrics->smoothed);
  }
  std::cout << "result written to " << out_path << "\n";
  return result.all_reached() ? kExitOk : kExitPartialPlan;
}

int do_derive(const mgrrt::UavParams& params, double configured_deg) {
  // Positivity only; the turn-capability check below reports instead of
  // rejecting.
  mgrrt::UavParams positive_check = params;
  positive_check.thrust_coeff = 1.0;
  positive_check.validate();

  const double f_max = mgrrt::max_total_thrust(params);
  const double theta = mgrrt::pitch_angle(params);
  std::cout << "max total thrust:    " << f_max << " N\n";
  std::cout << "cruise pitch angle:  " << theta << " rad (" << mgrrt::rad_to_deg(theta)
            << " deg)\n";
  const double capability = mgrrt::gamma_max(params);  // throws below the hover limit
  // Below 1e-6 1/m the turning radius exceeds 1000 km; that is the hover
  // limit up to rounding of the inputs.
  if (capability < 1e-6) {
    std::cout << "turning capability:  " << capability
              << " (thrust barely balances drag + weight; zero turning authority)\n";
  } else {
    std::cout << "turning capability:  " << capability << " 1/m\n";
    std::cout << "min turning radius:  " << mgrrt::turning_radius(params, f_max) << " m\n";
    std::cout << "read as an angle:    " << capability << " rad = "
              << mgrrt::rad_to_deg(capability) << " deg\n";
  }
  std::cout << "configured angle bound: " << configured_deg
            << " deg (planner default; the capability value above is a curvature "
               "and does not convert to this bound)\n";
  return kExitOk;
}

int do_bench(const std::string& scenario_path, int trials, bool parallel, std::string csv_path,
             std::string summary_path) {
  const mgrrt::Scenario sc = mgrrt::load_scenario(scenario_path);
  const mgrrt::BenchResult bench = mgrrt::run_bench(sc, trials, parallel);
  if (csv_path.empty()) csv_path = default_out("bench.csv");
  if (summary_path.empty()) summary_path = default_out("bench_summary.json");

  std::ofstream csv(csv_path);
  if (!csv) throw mgrrt::InvalidScenario("cannot write CSV file: " + csv_path);
  csv << mgrrt::bench_csv(bench);
  csv.close();

  const nlohmann::json summary = mgrrt::bench_summary_json(bench);
  std::ofstream js(summary_path);
  if (!js) throw mgrrt::InvalidScenario("cannot write summary file: " + summary_path);
  js << summary.dump(2) << '\n';
  js.close();

  std::cout << summary.dump(2) << "\nrows written to " << csv_path << "\nsummary written to "
            << summary_path << "\n";
  return kExitOk;
}

int do_plot(const std::string& result_path, std::string out_path, bool tree) {
  const mgrrt::RunResult result = mgrrt::load_result(result_path);
  if (out_path.empty()) out_path = default_out("result.svg");
  std::ofstream out(out_path);
  if (!out) throw mgrrt::InvalidResult("cannot write SVG file: " + out_path);
  out << mgrrt::render_svg(result, tree);
  std::cout << "plot written to " << out_path << "\n";
  return kExitOk;
}

int do_metrics(const std::string& result_path) {
  const mgrrt::RunResult result = mgrrt::load_result(result_path);
  mgrrt::audit_result(result);  // throws MetricsMismatch on any discrepancy

  std::cout << "self-audit: ok\nseed: " << result.seed << "\n";
  for (std::size_t i = 0; i < result.goals.size(); ++i) {
    const auto& g = result.goals[i];
    if (!g.reached) {
      std::cout << "goal " << (i + 1) << ": unreached (excluded from metrics)\n";
      continue;
    }
    std::cout << "goal " << (i + 1) << ": raw " << g.raw_length << " m, reduced "
              << g.reduced_length << " m, smoothed " << g.smoothed_length << " m, speed "
              << g.speed << " m/s, altitude " << g.altitude << " m\n";
  }
  if (result.metrics) {
    std::cout << "arrival time: " << result.arrival_time << " s\nmetrics (reached goals):\n";
    print_metrics("raw", result.metrics->raw);
    print_metrics("reduced", result.metrics->reduced);
    print_metrics("smoothed", result.metrics->smoothed);
  } else {
    std::cout << "no goal reached; no metrics recorded\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-goal RRT planning for cooperative UAV missions"};
  app.require_subcommand(1);
  std::cout << std::setprecision(10);

  std::string scenario_path, out_path, summary_path, result_path;
  std::optional<std::uint64_t> seed_override;
  std::uint64_t seed_value = 0;
  int trials = 10;
  bool parallel = false;
  bool tree = false;
  mgrrt::UavParams uav{};
  double configured_deg = 75.0;

  auto* cmd_plan = app.add_subcommand("plan", "Run the full pipeline on a scenario");
  cmd_plan->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  cmd_plan->add_option("-o,--out", out_path, "Result file (default $MGRRT_OUT_DIR/result.json)");
  auto* seed_opt = cmd_plan->add_option("--seed", seed_value, "Override the scenario seed");

  auto* cmd_derive =
      app.add_subcommand("derive", "Report the turning capability for a UAV parameter set");
  cmd_derive->add_option("--mass", uav.mass, "Mass (kg)");
  cmd_derive->add_option("--gravity", uav.gravity, "Gravity (m/s^2)");
  cmd_derive->add_option("--speed", uav.forward_speed, "Forward speed (m/s)");
  cmd_derive->add_option("--thrust-coeff", uav.thrust_coeff, "Thrust coefficient");
  cmd_derive->add_option("--friction-coeff", uav.friction_coeff, "Friction coefficient");
  cmd_derive->add_option("--omega-max", uav.max_motor_speed, "Max propeller speed");
  cmd_derive->add_option("--radius", uav.uav_radius, "UAV radius (m)");
  cmd_derive->add_option("--gamma-max-deg", configured_deg, "Configured angle bound (deg)");

  auto* cmd_bench = app.add_subcommand("bench", "Run seeded trials and summarize the metrics");
  cmd_bench->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  cmd_bench->add_option("--trials", trials, "Number of seeded trials")
      ->check(CLI::PositiveNumber);
  cmd_bench->add_flag("--parallel", parallel, "Distribute trials over hardware threads");
  cmd_bench->add_option("-o,--out", out_path, "CSV file (default $MGRRT_OUT_DIR/bench.csv)");
  cmd_bench->add_option("--summary", summary_path,
                        "Summary JSON (default $MGRRT_OUT_DIR/bench_summary.json)");

  auto* cmd_plot = app.add_subcommand("plot", "Render a result file as SVG");
  cmd_plot->add_option("result", result_path, "Result JSON file")->required();
  cmd_plot->add_option("-o,--out", out_path, "SVG file (default $MGRRT_OUT_DIR/result.svg)");
  cmd_plot->add_flag("--tree", tree, "Draw the search tree");

  auto* cmd_metrics =
      app.add_subcommand("metrics", "Recompute metrics from a result file and cross-check");
  cmd_metrics->add_option("result", result_path, "Result JSON file")->required();

  try {
    app.parse(argc, argv);
    if (seed_opt->count() > 0) seed_override = seed_value;

    if (*cmd_plan) return do_plan(scenario_path, out_path, seed_override);
    if (*cmd_derive) return do_derive(uav, configured_deg);
    if (*cmd_bench) return do_bench(scenario_path, trials, parallel, out_path, summary_path);
    if (*cmd_plot) return do_plot(result_path, out_path, tree);
    if (*cmd_metrics) return do_metrics(result_path);
    return kExitUnexpected;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  } catch (const mgrrt::MetricsMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAuditMismatch;
  } catch (const mgrrt::InvalidScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const mgrrt::InvalidResult& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const mgrrt::InsufficientThrust& e) {
    std::cerr << "error: " << e.what()
              << " (the vehicle cannot hold altitude at full thrust, so it cannot turn)\n";
    return kExitInvalidInput;
  } catch (const mgrrt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnexpected;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}
