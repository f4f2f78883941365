#include "errt/sensor_model.hpp"

#include <cmath>
#include <stdexcept>

namespace errt {

bool in_sensor_view(const Vec3& viewpoint, const Vec3& target, const SensorModel& model) {
  const double dx = viewpoint.x() - target.x();
  const double dy = viewpoint.y() - target.y();
  const double dz = viewpoint.z() - target.z();
  const double horiz = std::sqrt(dx * dx + dy * dy);
  if (horiz > model.range_m) return false;
  return std::abs(dz) <= horiz * std::tan(model.fov_rad / 2.0) + model.array_m / 2.0;
}

std::vector<VoxelIndex> visible_unknowns(const Vec3& viewpoint, const VoxelWorld& world,
                                         const SensorModel& model) {
  const auto vp = world.point_to_index(viewpoint);
  if (!vp) throw std::invalid_argument("visible_unknowns: viewpoint out of bounds");

  // Candidate voxels live in a box bounded by the horizontal range and the
  // cone's vertical extent at full range.
  const double res = world.resolution();
  const double vert = model.range_m * std::tan(model.fov_rad / 2.0) + model.array_m / 2.0;
  const int ri = static_cast<int>(std::ceil(model.range_m / res)) + 1;
  const int rk = static_cast<int>(std::ceil(vert / res)) + 1;

  const auto& dims = world.dims();
  const int i0 = std::max(0, vp->i - ri), i1 = std::min(dims.i - 1, vp->i + ri);
  const int j0 = std::max(0, vp->j - ri), j1 = std::min(dims.j - 1, vp->j + ri);
  const int k0 = std::max(0, vp->k - rk), k1 = std::min(dims.k - 1, vp->k + rk);

  std::vector<VoxelIndex> out;
  for (int i = i0; i <= i1; ++i)
    for (int j = j0; j <= j1; ++j)
      for (int k = k0; k <= k1; ++k) {
        const VoxelIndex v{i, j, k};
        if (world.state(v) != VoxelState::Unknown) continue;
        const Vec3 c = world.center(v);
        if (!in_sensor_view(viewpoint, c, model)) continue;
        if (!world.segment_free_excluding(viewpoint, c, block_occupied_unknown, v)) continue;
        out.push_back(v);
      }
  return out;
}

}  // namespace errt
