#pragma once

#include <optional>
#include <vector>

#include "errt/goal_sampler.hpp"
#include "errt/rng.hpp"
#include "errt/voxel_world.hpp"

namespace errt {

// Interpolated position trajectory; the planner's candidate paths.
struct Trajectory {
  std::vector<Vec3> points;
  double spacing = 0.75;
  int goal_index = -1;

  double length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) len += (points[i] - points[i - 1]).norm();
    return len;
  }
};

struct TreeNode {
  Vec3 position;
  int parent = -1;           // -1 for the root
  double cost = 0.0;         // path length from the root
};

struct RrtParams {
  double step_max = 2.0;     // max steering distance per extension
  double goal_radius = 1.0;  // goal condition ||goal - node|| <= d
  double rewire_gamma = 0.0; // 0 -> derived from the grid resolution
};

struct MultiGoalTree {
  std::vector<TreeNode> nodes;
  std::vector<int> best_leaf;  // per goal: node index or -1 when unreached
};

// Grows one shared RRT* in free space (Occupied and Unknown both block) for a
// fixed iteration budget, then finds per goal the cheapest node within
// goal_radius that also connects to the goal collision-free. Throws
// std::runtime_error if the start voxel is not Free.
MultiGoalTree grow_tree(const VoxelWorld& world, const Vec3& start, const GoalSet& goals,
                        int iterations, Rng& rng, const RrtParams& params);

// Root-to-node vertex chain.
std::vector<Vec3> extract_chain(const MultiGoalTree& tree, int node);

// Path improvement: connect the final vertex straight to the earliest
// reachable chain vertex, then drop every vertex whose removal keeps the
// bridging segment collision-free (single forward pass).
std::vector<Vec3> improve_path(const std::vector<Vec3>& chain, const VoxelWorld& world);

// Subdivides each chain segment into ceil(len/spacing) equal parts; endpoints
// are preserved and consecutive points are never farther than spacing apart.
Trajectory interpolate(const std::vector<Vec3>& chain, double spacing);

}  // namespace errt
