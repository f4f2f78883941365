#include "errt/voxel_world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace errt {

namespace {

// Boundary points resolve to the lower-index voxel: u in (k, k+1] -> k.
long long grid_index(double u) {
  return static_cast<long long>(std::ceil(u)) - 1;
}

}  // namespace

VoxelWorld::VoxelWorld(VoxelIndex dims, double resolution, Vec3 origin, VoxelState fill)
    : origin_(origin), res_(resolution), dims_(dims) {
  if (dims.i <= 0 || dims.j <= 0 || dims.k <= 0) throw std::invalid_argument("VoxelWorld: dims must be positive");
  if (!(resolution > 0.0)) throw std::invalid_argument("VoxelWorld: resolution must be positive");
  cells_.assign(static_cast<std::size_t>(dims.i) * dims.j * dims.k, fill);
}

Vec3 VoxelWorld::max_corner() const {
  return origin_ + Vec3(dims_.i, dims_.j, dims_.k) * res_;
}

std::optional<VoxelIndex> VoxelWorld::point_to_index(const Vec3& p) const {
  const Vec3 u = (p - origin_) / res_;
  const long long i = grid_index(u.x());
  const long long j = grid_index(u.y());
  const long long k = grid_index(u.z());
  if (i < 0 || j < 0 || k < 0 || i >= dims_.i || j >= dims_.j || k >= dims_.k) return std::nullopt;
  return VoxelIndex{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
}

VoxelQuery VoxelWorld::voxel_state(const Vec3& p) const {
  const auto v = point_to_index(p);
  if (!v) return VoxelQuery::OutOfBounds;
  return static_cast<VoxelQuery>(state(*v));
}

void VoxelWorld::walk_segment(const Vec3& a, const Vec3& b,
                              const std::function<bool(const VoxelIndex&)>& visit) const {
  const auto va = point_to_index(a);
  const auto vb = point_to_index(b);
  if (!va || !vb) throw std::invalid_argument("walk_segment: endpoints must be inside bounds");

  int cur[3] = {va->i, va->j, va->k};
  const int end[3] = {vb->i, vb->j, vb->k};

  const Vec3 ua = (a - origin_) / res_;
  const Vec3 ub = (b - origin_) / res_;
  const Vec3 d = ub - ua;

  double t_max[3];
  double t_delta[3];
  int step[3];
  for (int ax = 0; ax < 3; ++ax) {
    if (d[ax] > 0.0) {
      step[ax] = 1;
      t_max[ax] = (static_cast<double>(cur[ax]) + 1.0 - ua[ax]) / d[ax];
      t_delta[ax] = 1.0 / d[ax];
    } else if (d[ax] < 0.0) {
      step[ax] = -1;
      t_max[ax] = (static_cast<double>(cur[ax]) - ua[ax]) / d[ax];
      t_delta[ax] = -1.0 / d[ax];
    } else {
      step[ax] = 0;
      t_max[ax] = std::numeric_limits<double>::infinity();
      t_delta[ax] = std::numeric_limits<double>::infinity();
    }
  }

  auto at_end = [&] { return cur[0] == end[0] && cur[1] == end[1] && cur[2] == end[2]; };

  if (!visit(VoxelIndex{cur[0], cur[1], cur[2]})) return;

  const long long max_steps = 4LL * (dims_.i + dims_.j + dims_.k) + 16;
  for (long long n = 0; n < max_steps && !at_end(); ++n) {
    const double t_min = std::min({t_max[0], t_max[1], t_max[2]});
    // A crossing at t == 1 enters the next voxel only for a negative step:
    // the boundary point itself belongs to the lower-index voxel.
    bool stepped = false;
    for (int ax = 0; ax < 3; ++ax) {
      if (t_max[ax] != t_min) continue;
      const bool eligible = step[ax] > 0 ? t_min < 1.0 : t_min <= 1.0;
      if (!eligible) continue;
      cur[ax] += step[ax];
      t_max[ax] += t_delta[ax];
      stepped = true;
    }
    if (!stepped) break;
    VoxelIndex v{cur[0], cur[1], cur[2]};
    if (!in_bounds(v)) break;
    if (!visit(v)) return;
  }
  // Floating-point slack can strand the walk one cell short of the endpoint.
  if (!at_end()) visit(*vb);
}

bool VoxelWorld::segment_free(const Vec3& a, const Vec3& b, BlockMask blocking) const {
  bool free = true;
  walk_segment(a, b, [&](const VoxelIndex& v) {
    if (blocking.blocks(state(v))) {
      free = false;
      return false;
    }
    return true;
  });
  return free;
}

bool VoxelWorld::segment_free_excluding(const Vec3& a, const Vec3& b, BlockMask blocking,
                                        const VoxelIndex& exclude) const {
  bool free = true;
  walk_segment(a, b, [&](const VoxelIndex& v) {
    if (v == exclude) return true;
    if (blocking.blocks(state(v))) {
      free = false;
      return false;
    }
    return true;
  });
  return free;
}

std::vector<VoxelIndex> VoxelWorld::unknown_voxels() const {
  std::vector<VoxelIndex> out;
  for (int i = 0; i < dims_.i; ++i)
    for (int j = 0; j < dims_.j; ++j)
      for (int k = 0; k < dims_.k; ++k) {
        const VoxelIndex v{i, j, k};
        if (state(v) == VoxelState::Unknown) out.push_back(v);
      }
  return out;
}

std::size_t VoxelWorld::count(VoxelState s) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), s));
}

VoxelWorld load_world_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open world file: " + path);

  VoxelIndex dims;
  double res = 0.0;
  Vec3 origin = Vec3::Zero();
  bool have_dims = false, have_res = false, have_origin = false;
  std::optional<VoxelWorld> world;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
    };
    if (tag == "dims") {
      if (!(ls >> dims.i >> dims.j >> dims.k)) fail("malformed dims line");
      have_dims = true;
    } else if (tag == "res") {
      if (!(ls >> res)) fail("malformed res line");
      have_res = true;
    } else if (tag == "origin") {
      if (!(ls >> origin.x() >> origin.y() >> origin.z())) fail("malformed origin line");
      have_origin = true;
    } else if (tag == "occ") {
      if (!world) {
        if (!have_dims || !have_res || !have_origin) fail("occ before complete header");
        world.emplace(dims, res, origin, VoxelState::Free);
      }
      VoxelIndex v;
      if (!(ls >> v.i >> v.j >> v.k)) fail("malformed occ line");
      if (!world->in_bounds(v)) fail("occ index out of bounds");
      world->set_state(v, VoxelState::Occupied);
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  if (!have_dims || !have_res || !have_origin) throw std::runtime_error(path + ": incomplete world header");
  if (!world) world.emplace(dims, res, origin, VoxelState::Free);
  return std::move(*world);
}

void save_world_file(const VoxelWorld& world, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write world file: " + path);
  out << "dims " << world.dims().i << ' ' << world.dims().j << ' ' << world.dims().k << '\n';
  out << "res " << world.resolution() << '\n';
  out << "origin " << world.origin().x() << ' ' << world.origin().y() << ' ' << world.origin().z() << '\n';
  for (int i = 0; i < world.dims().i; ++i)
    for (int j = 0; j < world.dims().j; ++j)
      for (int k = 0; k < world.dims().k; ++k) {
        const VoxelIndex v{i, j, k};
        if (world.state(v) == VoxelState::Occupied) out << "occ " << i << ' ' << j << ' ' << k << '\n';
      }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace errt
