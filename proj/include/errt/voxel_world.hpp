#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "errt/geometry.hpp"

namespace errt {

enum class VoxelState : uint8_t { Free = 0, Occupied = 1, Unknown = 2 };

// Query outcome for a point lookup; OutOfBounds is a value, not a fault.
enum class VoxelQuery : uint8_t { Free = 0, Occupied = 1, Unknown = 2, OutOfBounds = 3 };

// Set of voxel states that block a segment, one bit per state.
struct BlockMask {
  uint8_t bits = 0;

  static constexpr uint8_t bit(VoxelState s) { return static_cast<uint8_t>(1u << static_cast<uint8_t>(s)); }

  constexpr bool blocks(VoxelState s) const { return (bits & bit(s)) != 0; }
};

inline constexpr BlockMask block_occupied{BlockMask::bit(VoxelState::Occupied)};
inline constexpr BlockMask block_occupied_unknown{
    static_cast<uint8_t>(BlockMask::bit(VoxelState::Occupied) | BlockMask::bit(VoxelState::Unknown))};

// Dense 3D grid map. Points exactly on voxel boundaries resolve to the
// lower-index voxel along that axis, so the covered volume per axis is
// (origin, origin + dims*res].
class VoxelWorld {
 public:
  VoxelWorld() = default;
  VoxelWorld(VoxelIndex dims, double resolution, Vec3 origin, VoxelState fill);

  const VoxelIndex& dims() const { return dims_; }
  double resolution() const { return res_; }
  const Vec3& origin() const { return origin_; }
  Vec3 max_corner() const;
  std::size_t voxel_count() const { return cells_.size(); }

  bool in_bounds(const VoxelIndex& v) const {
    return v.i >= 0 && v.j >= 0 && v.k >= 0 && v.i < dims_.i && v.j < dims_.j && v.k < dims_.k;
  }

  std::size_t linear_index(const VoxelIndex& v) const {
    return (static_cast<std::size_t>(v.i) * dims_.j + v.j) * dims_.k + v.k;
  }

  VoxelState state(const VoxelIndex& v) const { return cells_[linear_index(v)]; }
  void set_state(const VoxelIndex& v, VoxelState s) { cells_[linear_index(v)] = s; }

  // Voxel containing p, or nullopt outside the grid volume.
  std::optional<VoxelIndex> point_to_index(const Vec3& p) const;

  Vec3 center(const VoxelIndex& v) const {
    return origin_ + Vec3(v.i + 0.5, v.j + 0.5, v.k + 0.5) * res_;
  }

  VoxelQuery voxel_state(const Vec3& p) const;

  // Visits every voxel the segment a->b intersects, in traversal order.
  // Visitor returns false to stop early. Endpoints must be in bounds.
  void walk_segment(const Vec3& a, const Vec3& b,
                    const std::function<bool(const VoxelIndex&)>& visit) const;

  // True iff no traversed voxel has a state in `blocking`.
  bool segment_free(const Vec3& a, const Vec3& b, BlockMask blocking) const;

  // Same, but the voxel `exclude` never blocks (line-of-sight to a voxel's
  // own center).
  bool segment_free_excluding(const Vec3& a, const Vec3& b, BlockMask blocking,
                              const VoxelIndex& exclude) const;

  // All Unknown voxels in lexicographic (i, j, k) order.
  std::vector<VoxelIndex> unknown_voxels() const;

  std::size_t count(VoxelState s) const;

 private:
  Vec3 origin_ = Vec3::Zero();
  double res_ = 1.0;
  VoxelIndex dims_{0, 0, 0};
  std::vector<VoxelState> cells_;
};

// Plain-text world file: header lines `dims nx ny nz`, `res g_res`,
// `origin x y z`, then one `occ i j k` line per occupied voxel; every other
// voxel is Free.
VoxelWorld load_world_file(const std::string& path);
void save_world_file(const VoxelWorld& world, const std::string& path);

}  // namespace errt
