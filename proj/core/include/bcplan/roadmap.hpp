#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bcplan/geometry.hpp"

namespace bcplan {

struct RoadmapEdge {
  std::int32_t from = -1;
  std::int32_t to = -1;
  double length = 0.0;
};

struct PrmParams {
  int n_nodes = 0;
  double connect_radius = 0.0;
  double robot_radius = 0.0;
  std::uint64_t seed = 0;
  // Collision sample spacing along edges; <= 0 selects resolution/2.
  double collision_spacing = 0.0;
};

/// Directed geometric graph over free space. Sampled nodes come first, then
/// the goal, then the source (last index). Immutable once built.
class Roadmap {
 public:
  Roadmap() = default;
  Roadmap(std::vector<Point2> nodes, std::vector<RoadmapEdge> edges, int source, int goal);

  /// Uniform free-space sampling plus straight-line radius connection. Every
  /// unordered pair within connect_radius whose segment is collision-free at
  /// robot_radius yields directed edges both ways; self-transitions are never
  /// created. Deterministic for a fixed seed. Throws if source/goal collide
  /// or if sampling exhausts its attempt budget (1000 attempts per node).
  static Roadmap build_prm(const OccupancyGrid& grid, const PrmParams& params, Point2 source,
                           std::optional<Point2> goal);

  const std::vector<Point2>& nodes() const { return nodes_; }
  const std::vector<RoadmapEdge>& edges() const { return edges_; }
  int num_nodes() const { return int(nodes_.size()); }
  int source_id() const { return source_; }
  int goal_id() const { return goal_; }

  /// Edge ids incoming to each node, sorted by origin node id.
  const std::vector<std::vector<std::int32_t>>& in_edge_ids() const { return in_edges_; }

  /// Node ids with a direct transition into `node`.
  std::vector<std::int32_t> in_neighbors(int node) const;

  int max_in_degree() const;

  /// Stable digest of node positions, edge list, and endpoints; used to
  /// detect geometry changes across replans.
  std::uint64_t geometry_hash() const;

 private:
  void build_adjacency();

  std::vector<Point2> nodes_;
  std::vector<RoadmapEdge> edges_;
  std::vector<std::vector<std::int32_t>> in_edges_;
  int source_ = -1;
  int goal_ = -1;
};

}  // namespace bcplan
