#pragma once

#include <vector>

#include "errt/geometry.hpp"
#include "errt/voxel_world.hpp"

namespace errt {

// Simplified 3D lidar: 360 degrees in the x-y plane, a vertical field of
// view theta about the horizontal, and a sensor array of height array_m.
struct SensorModel {
  double range_m = 6.0;
  double fov_rad = 32.0 * M_PI / 180.0;
  double array_m = 0.1;
};

// True iff `target` lies inside the sensor volume seen from `viewpoint`:
// the horizontal distance is within range and the vertical offset within
// the cone half-angle plus half the array height. Inclusive at both limits.
bool in_sensor_view(const Vec3& viewpoint, const Vec3& target, const SensorModel& model);

// All Unknown voxels whose center is in sensor view from `viewpoint` with a
// line of sight unobstructed by Occupied or other Unknown voxels (the target
// never blocks itself). Lexicographic order. Throws if viewpoint is out of
// bounds.
std::vector<VoxelIndex> visible_unknowns(const Vec3& viewpoint, const VoxelWorld& world,
                                         const SensorModel& model);

}  // namespace errt
