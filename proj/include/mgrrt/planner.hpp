#pragma once

#include <chrono>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mgrrt/environment.hpp"
#include "mgrrt/errors.hpp"
#include "mgrrt/geometry.hpp"

namespace mgrrt {

struct TreeNode {
  Vec2 position;
  int parent = -1;       // -1 only at the root
  bool is_goal = false;  // goal leaves are never expanded or matched by nearest()
};

/// Shared tree over all goals. Nodes are append-only; parents precede children.
class Tree {
 public:
  explicit Tree(const Vec2& root) { nodes_.push_back({root, -1, false}); }

  int add(const Vec2& p, int parent, bool is_goal) {
    nodes_.push_back({p, parent, is_goal});
    return static_cast<int>(nodes_.size()) - 1;
  }

  const TreeNode& operator[](int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  std::vector<TreeNode> nodes_;
};

struct PlannerConfig {
  double step = 50.0;                     // tree-expansion distance, meters
  int max_iterations = 5000;              // samples drawn before giving up
  double gamma_max = 75.0 * std::numbers::pi / 180.0;  // turning bound, radians
  std::uint64_t seed = 0;

  void validate() const {
    if (!(step > 0.0)) throw InvalidScenario("planner.step must be > 0");
    if (max_iterations <= 0) throw InvalidScenario("planner.max_iterations must be > 0");
    if (!(gamma_max > 0.0 && gamma_max <= std::numbers::pi)) {
      throw InvalidScenario("planner.gamma_max must be in (0, pi]");
    }
  }
};

struct GoalResult {
  bool reached = false;
  std::vector<Vec2> path;  // start..goal when reached, empty otherwise
};

struct PlanResult {
  std::vector<GoalResult> goals;
  int iterations_used = 0;
  double wall_time = 0.0;  // seconds spent inside plan()
  std::vector<TreeNode> tree;

  bool all_reached() const {
    for (const auto& g : goals) {
      if (!g.reached) return false;
    }
    return true;
  }
};

/**
 * @brief Point on the ray near->rand at distance min(|rand - near|, step).
 * @throws DegenerateSegment if the two points coincide within tolerance.
 */
inline Vec2 steer(const Vec2& near, const Vec2& rand, double step) {
  const Vec2 d = rand - near;
  const double len = d.norm();
  if (len < kEpsGeom) throw DegenerateSegment("steer: sample coincides with nearest node");
  const double reach = std::min(len, step);
  return near + d * (reach / len);
}

/**
 * @brief Index of the non-goal node closest to p; ties go to the earliest
 * inserted node. Goal leaves are path endpoints only and never expanded.
 */
inline int nearest(const Tree& tree, const Vec2& p) {
  int best = -1;
  double best_sq = std::numeric_limits<double>::infinity();
  for (int i = 0; i < tree.size(); ++i) {
    if (tree[i].is_goal) continue;
    const double d = (tree[i].position - p).norm_sq();
    if (d < best_sq) {
      best_sq = d;
      best = i;
    }
  }
  return best;
}

/**
 * @brief Whether attaching an edge at->next keeps the turning angle at `at`
 * within gamma_max. The root has no incoming heading and accepts any
 * direction.
 */
inline bool angle_admissible(const Tree& tree, int at, const Vec2& next, double gamma_max) {
  const TreeNode& node = tree[at];
  if (node.parent < 0) return true;
  return turning_angle(tree[node.parent].position, node.position, next) <= gamma_max;
}

/**
 * @brief Multi-goal tree expansion.
 *
 * One shared tree is grown from `start`. Each iteration draws one uniform
 * sample, steers from the nearest node, and inserts the new node when the
 * connecting edge is collision-free and satisfies the turning gate. After
 * every insertion (including the root at startup) each still-unreached goal
 * is attached as a leaf if the direct edge passes the same two gates; the
 * first connection to a goal wins. A sample that coincides with its nearest
 * node is skipped. Every sample counts toward max_iterations.
 *
 * Deterministic: the same seed and inputs reproduce the same result.
 *
 * @throws InvalidScenario when the start or a goal is not strictly inside
 * the free space, or goals are not pairwise distinct and distinct from the
 * start.
 */
inline PlanResult plan(const Workspace& ws, const Vec2& start, const std::vector<Vec2>& goals,
                       const PlannerConfig& cfg) {
  cfg.validate();
  if (goals.empty()) throw InvalidScenario("goals: at least one goal is required");
  if (!ws.point_free(start)) throw InvalidScenario("start: not inside the free space");
  for (std::size_t i = 0; i < goals.size(); ++i) {
    const std::string at = "goals[" + std::to_string(i) + "]";
    if (!ws.point_free(goals[i])) throw InvalidScenario(at + ": not inside the free space");
    if (distance(goals[i], start) < kEpsGeom) throw InvalidScenario(at + ": coincides with start");
    for (std::size_t j = i + 1; j < goals.size(); ++j) {
      if (distance(goals[i], goals[j]) < kEpsGeom) {
        throw InvalidScenario(at + ": coincides with goals[" + std::to_string(j) + "]");
      }
    }
  }

  const auto t0 = std::chrono::steady_clock::now();

  Tree tree(start);
  const int n = static_cast<int>(goals.size());
  PlanResult result;
  result.goals.resize(static_cast<std::size_t>(n));
  int reached = 0;

  const auto extract_path = [&tree](int leaf) {
    std::vector<Vec2> path;
    for (int id = leaf; id >= 0; id = tree[id].parent) {
      path.push_back(tree[id].position);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Attach every reachable unreached goal directly to the freshly inserted
  // node; first connection wins. The cheap angle gate runs before the
  // obstacle sweep.
  const auto try_connect_goals = [&](int from) {
    for (int i = 0; i < n; ++i) {
      auto& slot = result.goals[static_cast<std::size_t>(i)];
      if (slot.reached) continue;
      const Vec2& goal = goals[static_cast<std::size_t>(i)];
      if (distance(tree[from].position, goal) < kEpsGeom) continue;
      if (!angle_admissible(tree, from, goal, cfg.gamma_max)) continue;
      if (!ws.segment_free({tree[from].position, goal})) continue;
      const int leaf = tree.add(goal, from, true);
      slot.reached = true;
      slot.path = extract_path(leaf);
      ++reached;
    }
  };

  try_connect_goals(0);  // the root is the first inserted node

  Rng rng(cfg.seed);
  int iters = 0;
  while (reached < n && iters < cfg.max_iterations) {
    ++iters;
    const Vec2 sample = ws.sample_uniform(rng);
    const int near = nearest(tree, sample);
    if (distance(tree[near].position, sample) < kEpsGeom) continue;
    const Vec2 fresh = steer(tree[near].position, sample, cfg.step);
    if (!ws.segment_free({tree[near].position, fresh})) continue;
    if (!angle_admissible(tree, near, fresh, cfg.gamma_max)) continue;
    const int id = tree.add(fresh, near, false);
    try_connect_goals(id);
  }

  result.iterations_used = iters;
  result.tree = tree.nodes();
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace mgrrt
