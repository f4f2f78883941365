#include "errt/rrt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace errt {

namespace {

// Uniform bucket grid over the world's voxel lattice for nearest and radius
// queries; iteration order is index-based and therefore deterministic.
class PointGrid {
 public:
  explicit PointGrid(const VoxelWorld& world) : world_(world), buckets_(world.voxel_count()) {}

  void insert(int id, const Vec3& p) {
    const auto v = world_.point_to_index(p);
    buckets_[world_.linear_index(*v)].push_back(id);
  }

  template <typename Fn>
  void for_ring(const VoxelIndex& c, int ring, Fn&& fn) const {
    const auto& dims = world_.dims();
    const int i0 = std::max(0, c.i - ring), i1 = std::min(dims.i - 1, c.i + ring);
    const int j0 = std::max(0, c.j - ring), j1 = std::min(dims.j - 1, c.j + ring);
    const int k0 = std::max(0, c.k - ring), k1 = std::min(dims.k - 1, c.k + ring);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j)
        for (int k = k0; k <= k1; ++k) {
          if (std::max({std::abs(i - c.i), std::abs(j - c.j), std::abs(k - c.k)}) != ring) continue;
          for (int id : buckets_[world_.linear_index(VoxelIndex{i, j, k})]) fn(id);
        }
  }

  int max_ring() const {
    const auto& d = world_.dims();
    return std::max({d.i, d.j, d.k});
  }

 private:
  const VoxelWorld& world_;
  std::vector<std::vector<int>> buckets_;
};

int nearest_node(const PointGrid& grid, const std::vector<TreeNode>& nodes, const VoxelWorld& world,
                 const Vec3& p) {
  const auto c = world.point_to_index(p);
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int ring = 0; ring <= grid.max_ring(); ++ring) {
    // Any point in a cell at Chebyshev ring distance r lies at least
    // (r - 1) * res away from the query.
    if (best >= 0 && (ring - 1) * world.resolution() > best_dist) break;
    grid.for_ring(*c, ring, [&](int id) {
      const double d = (nodes[id].position - p).norm();
      if (d < best_dist) {
        best_dist = d;
        best = id;
      }
    });
  }
  return best;
}

std::vector<int> radius_query(const PointGrid& grid, const std::vector<TreeNode>& nodes,
                              const VoxelWorld& world, const Vec3& p, double radius) {
  std::vector<int> out;
  if (radius <= 0.0) return out;
  const auto c = world.point_to_index(p);
  const int max_ring = static_cast<int>(std::floor(radius / world.resolution())) + 1;
  for (int ring = 0; ring <= max_ring; ++ring) {
    grid.for_ring(*c, ring, [&](int id) {
      if ((nodes[id].position - p).norm() <= radius) out.push_back(id);
    });
  }
  return out;
}

}  // namespace

MultiGoalTree grow_tree(const VoxelWorld& world, const Vec3& start, const GoalSet& goals,
                        int iterations, Rng& rng, const RrtParams& params) {
  if (iterations < 1) throw std::invalid_argument("grow_tree: iterations must be >= 1");
  if (world.voxel_state(start) != VoxelQuery::Free)
    throw std::runtime_error("grow_tree: start voxel is not Free");

  const double res = world.resolution();
  const double gamma =
      params.rewire_gamma > 0.0 ? params.rewire_gamma : 3.0 * res / std::cbrt(std::log(2.0) / 2.0);

  MultiGoalTree tree;
  tree.nodes.push_back(TreeNode{start, -1, 0.0});
  std::vector<std::vector<int>> children(1);

  PointGrid grid(world);
  grid.insert(0, start);

  const Vec3 lo = world.origin();
  const Vec3 hi = world.max_corner();
  std::uniform_real_distribution<double> ux(lo.x(), hi.x());
  std::uniform_real_distribution<double> uy(lo.y(), hi.y());
  std::uniform_real_distribution<double> uz(lo.z(), hi.z());

  for (int it = 0; it < iterations; ++it) {
    const Vec3 sample(ux(rng), uy(rng), uz(rng));
    if (world.voxel_state(sample) != VoxelQuery::Free) continue;

    const int nearest = nearest_node(grid, tree.nodes, world, sample);
    Vec3 pos = sample;
    const double dist_nearest = (sample - tree.nodes[nearest].position).norm();
    if (dist_nearest > params.step_max)
      pos = tree.nodes[nearest].position +
            (sample - tree.nodes[nearest].position) * (params.step_max / dist_nearest);
    if (world.voxel_state(pos) != VoxelQuery::Free) continue;

    const double n = static_cast<double>(tree.nodes.size());
    const double radius = std::min(gamma * std::cbrt(std::log(n) / n), params.step_max);
    std::vector<int> neighbors = radius_query(grid, tree.nodes, world, pos, radius);

    // Choose the cheapest collision-free parent among the neighborhood,
    // falling back to the nearest node.
    int parent = -1;
    double parent_cost = std::numeric_limits<double>::infinity();
    auto consider = [&](int id) {
      const double c = tree.nodes[id].cost + (pos - tree.nodes[id].position).norm();
      if (c < parent_cost && world.segment_free(tree.nodes[id].position, pos, block_occupied_unknown)) {
        parent_cost = c;
        parent = id;
      }
    };
    for (int id : neighbors) consider(id);
    if (std::find(neighbors.begin(), neighbors.end(), nearest) == neighbors.end()) consider(nearest);
    if (parent < 0) continue;

    const int new_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{pos, parent, parent_cost});
    children.emplace_back();
    children[parent].push_back(new_id);
    grid.insert(new_id, pos);

    // Rewire: reroute any neighbor that becomes cheaper through the new node
    // and propagate the cost change to its descendants.
    for (int nb : neighbors) {
      const double through = parent_cost + (tree.nodes[nb].position - pos).norm();
      if (through >= tree.nodes[nb].cost - 1e-12) continue;
      if (!world.segment_free(pos, tree.nodes[nb].position, block_occupied_unknown)) continue;
      auto& old_kids = children[tree.nodes[nb].parent];
      old_kids.erase(std::find(old_kids.begin(), old_kids.end(), nb));
      tree.nodes[nb].parent = new_id;
      children[new_id].push_back(nb);
      const double delta = through - tree.nodes[nb].cost;
      std::vector<int> stack{nb};
      while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        tree.nodes[id].cost += delta;
        for (int kid : children[id]) stack.push_back(kid);
      }
    }
  }

  // Per goal: cheapest node inside the goal radius whose direct hop to the
  // goal is also collision-free, so appending the goal keeps the path valid.
  tree.best_leaf.assign(goals.goals.size(), -1);
  for (std::size_t g = 0; g < goals.goals.size(); ++g) {
    const Vec3& gp = goals.goals[g].position;
    std::vector<std::pair<double, int>> near;
    for (std::size_t id = 0; id < tree.nodes.size(); ++id)
      if ((tree.nodes[id].position - gp).norm() <= params.goal_radius)
        near.emplace_back(tree.nodes[id].cost, static_cast<int>(id));
    std::sort(near.begin(), near.end());
    for (const auto& [cost, id] : near) {
      if (world.segment_free(tree.nodes[id].position, gp, block_occupied_unknown)) {
        tree.best_leaf[g] = id;
        break;
      }
    }
  }
  return tree;
}

std::vector<Vec3> extract_chain(const MultiGoalTree& tree, int node) {
  std::vector<Vec3> chain;
  for (int id = node; id >= 0; id = tree.nodes[id].parent) chain.push_back(tree.nodes[id].position);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<Vec3> improve_path(const std::vector<Vec3>& chain, const VoxelWorld& world) {
  if (chain.size() <= 2) return chain;

  // (a) Connect the endpoint straight to the earliest visible vertex.
  std::vector<Vec3> cut;
  const Vec3& goal = chain.back();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    cut.push_back(chain[i]);
    if (world.segment_free(chain[i], goal, block_occupied_unknown)) break;
  }
  cut.push_back(goal);

  // (b) Drop redundant interior vertices in a single forward pass.
  if (cut.size() <= 2) return cut;
  std::vector<Vec3> out;
  out.push_back(cut.front());
  for (std::size_t i = 1; i + 1 < cut.size(); ++i) {
    if (!world.segment_free(out.back(), cut[i + 1], block_occupied_unknown)) out.push_back(cut[i]);
  }
  out.push_back(cut.back());
  return out;
}

Trajectory interpolate(const std::vector<Vec3>& chain, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("interpolate: spacing must be positive");
  Trajectory traj;
  traj.spacing = spacing;
  if (chain.empty()) return traj;
  traj.points.push_back(chain.front());
  for (std::size_t s = 1; s < chain.size(); ++s) {
    const Vec3& a = chain[s - 1];
    const Vec3& b = chain[s];
    const double len = (b - a).norm();
    if (len < 1e-12) continue;
    const int subdivisions = std::max(1, static_cast<int>(std::ceil(len / spacing - 1e-9)));
    for (int i = 1; i <= subdivisions; ++i)
      traj.points.push_back(a + (b - a) * (static_cast<double>(i) / subdivisions));
  }
  return traj;
}

}  // namespace errt
