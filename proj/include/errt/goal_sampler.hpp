#pragma once

#include <optional>
#include <vector>

#include "errt/rng.hpp"
#include "errt/sensor_model.hpp"
#include "errt/voxel_world.hpp"

namespace errt {

// A candidate exploration goal plus the unknown voxel that certified it.
struct Goal {
  Vec3 position;
  VoxelIndex witness;
};

struct GoalSet {
  std::vector<Goal> goals;
};

// Samples up to n_goal positions, each in a Free voxel, in sensor view of at
// least one Unknown voxel with an unobstructed straight path to its center.
// Unknown voxels are scanned in a freshly randomized order per candidate and
// the first witness wins. Returns nullopt when the map holds no Unknown
// voxels (exploration exhausted). Fewer than n_goal goals are returned only
// when max_attempts is spent.
std::optional<GoalSet> generate_goals(const VoxelWorld& world, const SensorModel& model,
                                      int n_goal, Rng& rng, long max_attempts);

}  // namespace errt
