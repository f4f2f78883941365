#include "errt/goal_sampler.hpp"

#include <stdexcept>

namespace errt {

std::optional<GoalSet> generate_goals(const VoxelWorld& world, const SensorModel& model,
                                      int n_goal, Rng& rng, long max_attempts) {
  if (n_goal < 1) throw std::invalid_argument("generate_goals: n_goal must be >= 1");

  const std::vector<VoxelIndex> unknowns = world.unknown_voxels();
  if (unknowns.empty()) return std::nullopt;

  const Vec3 lo = world.origin();
  const Vec3 hi = world.max_corner();
  std::uniform_real_distribution<double> ux(lo.x(), hi.x());
  std::uniform_real_distribution<double> uy(lo.y(), hi.y());
  std::uniform_real_distribution<double> uz(lo.z(), hi.z());

  GoalSet set;
  std::vector<VoxelIndex> scan(unknowns.size());
  for (long attempt = 0; attempt < max_attempts && static_cast<int>(set.goals.size()) < n_goal;
       ++attempt) {
    const Vec3 p(ux(rng), uy(rng), uz(rng));
    if (world.voxel_state(p) != VoxelQuery::Free) continue;

    // Incremental Fisher-Yates: draw the scan order lazily and stop at the
    // first unknown voxel that certifies the candidate.
    scan = unknowns;
    bool accepted = false;
    for (std::size_t s = 0; s < scan.size() && !accepted; ++s) {
      std::uniform_int_distribution<std::size_t> pick(s, scan.size() - 1);
      std::swap(scan[s], scan[pick(rng)]);
      const VoxelIndex& u = scan[s];
      const Vec3 c = world.center(u);
      if (!in_sensor_view(p, c, model)) continue;
      if (!world.segment_free_excluding(p, c, block_occupied_unknown, u)) continue;
      set.goals.push_back(Goal{p, u});
      accepted = true;
    }
  }
  return set;
}

}  // namespace errt
