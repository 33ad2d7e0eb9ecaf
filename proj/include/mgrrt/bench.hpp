#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mgrrt/result.hpp"
#include "mgrrt/scenario.hpp"

namespace mgrrt {

struct SummaryStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  double median = 0.0;
};

inline SummaryStats summarize(std::vector<double> values) {
  SummaryStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (const double v : values) var += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(values.size()));
  const std::size_t n = values.size();
  s.median = (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

struct BenchTrial {
  int trial = 0;  // 1-based row number
  std::uint64_t seed = 0;
  int goals_reached = 0;
  int goals_total = 0;
  bool complete = false;              // all goals reached
  std::optional<Metrics> smoothed;    // metrics over smoothed paths of reached goals
  std::string error;                  // non-empty if the trial threw
};

struct BenchResult {
  std::uint64_t base_seed = 0;
  std::vector<BenchTrial> trials;
};

/**
 * @brief Run `trials` seeded pipeline executions; trial i uses seed
 * base_seed + i - 1.
 *
 * A failed or partial trial is recorded, never fatal. With parallel=true the
 * trials are distributed over hardware threads; each owns its workspace and
 * RNG, and rows are stored by trial index, so the output content does not
 * depend on the execution mode (measured times aside).
 */
inline BenchResult run_bench(const Scenario& scenario, int trials, bool parallel) {
  if (trials < 1) throw InvalidScenario("bench: trials must be >= 1");
  BenchResult out;
  out.base_seed = scenario.planner.seed;
  out.trials.resize(static_cast<std::size_t>(trials));

  const auto run_one = [&](int index) {
    BenchTrial& row = out.trials[static_cast<std::size_t>(index)];
    row.trial = index + 1;
    row.seed = out.base_seed + static_cast<std::uint64_t>(index);
    row.goals_total = static_cast<int>(scenario.goals.size());
    try {
      const RunResult r = run_pipeline(scenario, row.seed);
      for (const auto& g : r.goals) {
        if (g.reached) ++row.goals_reached;
      }
      row.complete = r.all_reached();
      if (r.metrics) row.smoothed = r.metrics->smoothed;
    } catch (const Error& e) {
      row.error = e.what();
    }
  };

  if (!parallel || trials == 1) {
    for (int i = 0; i < trials; ++i) run_one(i);
    return out;
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(trials));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) run_one(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

namespace detail {

/// Shortest round-trip decimal form, locale-independent.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Per-trial rows plus one closing `mean` row over the complete trials.
inline std::string bench_csv(const BenchResult& b) {
  std::string csv =
      "trial,seed,goals_reached,goals_total,mean_path_length,mean_turning_angle,"
      "planning_time_s\n";
  std::vector<double> lengths, angles, times;
  for (const BenchTrial& t : b.trials) {
    csv += std::to_string(t.trial) + ',' + std::to_string(t.seed) + ',' +
           std::to_string(t.goals_reached) + ',' + std::to_string(t.goals_total) + ',';
    if (t.smoothed) {
      csv += detail::format_double(t.smoothed->mean_path_length) + ',' +
             detail::format_double(t.smoothed->mean_turning_angle) + ',' +
             detail::format_double(t.smoothed->planning_time);
    } else {
      csv += ",,";
    }
    csv += '\n';
    if (t.complete && t.smoothed) {
      lengths.push_back(t.smoothed->mean_path_length);
      angles.push_back(t.smoothed->mean_turning_angle);
      times.push_back(t.smoothed->planning_time);
    }
  }
  csv += "mean,,,,";
  if (!lengths.empty()) {
    csv += detail::format_double(summarize(lengths).mean) + ',' +
           detail::format_double(summarize(angles).mean) + ',' +
           detail::format_double(summarize(times).mean);
  } else {
    csv += ",,";
  }
  csv += '\n';
  return csv;
}

inline nlohmann::json bench_summary_json(const BenchResult& b) {
  using nlohmann::json;
  std::vector<double> lengths, angles, times;
  int complete = 0;
  for (const BenchTrial& t : b.trials) {
    if (t.complete && t.smoothed) {
      ++complete;
      lengths.push_back(t.smoothed->mean_path_length);
      angles.push_back(t.smoothed->mean_turning_angle);
      times.push_back(t.smoothed->planning_time);
    }
  }
  const auto stats_json = [](const std::vector<double>& v) -> json {
    if (v.empty()) return nullptr;
    const SummaryStats s = summarize(v);
    return {{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"stddev", s.stddev},
            {"median", s.median}};
  };
  json j;
  j["base_seed"] = b.base_seed;
  j["trials"] = b.trials.size();
  j["complete_trials"] = complete;
  j["metrics_over"] = "smoothed";
  j["mean_path_length"] = stats_json(lengths);
  j["mean_turning_angle"] = stats_json(angles);
  j["planning_time_s"] = stats_json(times);
  return j;
}

}  // namespace mgrrt
