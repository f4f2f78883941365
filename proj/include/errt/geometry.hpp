#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace errt {

using Vec3 = Eigen::Vector3d;

// Integer voxel index triple (i, j, k).
struct VoxelIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  bool operator==(const VoxelIndex&) const = default;
};

// Lexicographic on (i, j, k).
inline bool operator<(const VoxelIndex& a, const VoxelIndex& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.k < b.k;
}

}  // namespace errt
