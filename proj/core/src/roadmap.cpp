#include "bcplan/roadmap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace bcplan {

namespace {

// Portable uniform double in [0, 1) from the raw engine stream; avoids
// libstdc++/libc++ distribution differences for reproducible roadmaps.
double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

std::int64_t bucket_key(std::int64_t bx, std::int64_t by) {
  return bx * 0x10000'0000ll + by;
}

}  // namespace

Roadmap::Roadmap(std::vector<Point2> nodes, std::vector<RoadmapEdge> edges, int source, int goal)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), source_(source), goal_(goal) {
  if (source_ < 0 || source_ >= num_nodes()) throw std::invalid_argument("roadmap: bad source id");
  if (goal_ < 0 || goal_ >= num_nodes()) throw std::invalid_argument("roadmap: bad goal id");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= num_nodes() || e.to < 0 || e.to >= num_nodes())
      throw std::invalid_argument("roadmap: edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("roadmap: self-transition");
  }
  build_adjacency();
}

Roadmap Roadmap::build_prm(const OccupancyGrid& grid, const PrmParams& params, Point2 source,
                           std::optional<Point2> goal) {
  if (params.n_nodes < 0) throw std::invalid_argument("prm: n_nodes must be >= 0");
  if (!(params.connect_radius > 0.0)) throw std::invalid_argument("prm: connect_radius must be > 0");
  if (!grid.point_free(source, params.robot_radius))
    throw std::runtime_error("prm: source is in collision");
  if (goal && !grid.point_free(*goal, params.robot_radius))
    throw std::runtime_error("prm: goal is in collision");

  Roadmap rm;
  rm.nodes_.reserve(std::size_t(params.n_nodes) + 2);

  std::mt19937_64 rng(params.seed);
  const Point2 o = grid.origin();
  const double ex = grid.extent_x();
  const double ey = grid.extent_y();
  const std::uint64_t max_attempts = std::uint64_t(params.n_nodes) * 1000;
  std::uint64_t attempts = 0;
  while (rm.nodes_.size() < std::size_t(params.n_nodes)) {
    if (attempts++ >= max_attempts)
      throw std::runtime_error("prm: sampling attempt budget exhausted; free space too small?");
    const Point2 p{o.x + uniform01(rng) * ex, o.y + uniform01(rng) * ey};
    if (grid.point_free(p, params.robot_radius)) rm.nodes_.push_back(p);
  }

  const bool distinct_goal = goal && !(*goal == source);
  if (distinct_goal) rm.nodes_.push_back(*goal);
  rm.nodes_.push_back(source);
  rm.source_ = int(rm.nodes_.size()) - 1;
  rm.goal_ = distinct_goal ? rm.source_ - 1 : rm.source_;

  // Radius connection via a uniform spatial hash keyed by connect_radius-sized
  // buckets; candidate order is made deterministic by sorting.
  const double r = params.connect_radius;
  std::unordered_map<std::int64_t, std::vector<std::int32_t>> buckets;
  buckets.reserve(rm.nodes_.size() * 2);
  const auto bucket_of = [&](const Point2& p) {
    return bucket_key(std::int64_t(std::floor(p.x / r)), std::int64_t(std::floor(p.y / r)));
  };
  for (std::int32_t i = 0; i < int(rm.nodes_.size()); ++i)
    buckets[bucket_of(rm.nodes_[i])].push_back(i);

  std::vector<std::int32_t> candidates;
  for (std::int32_t i = 0; i < int(rm.nodes_.size()); ++i) {
    const Point2& a = rm.nodes_[i];
    candidates.clear();
    const std::int64_t bx = std::int64_t(std::floor(a.x / r));
    const std::int64_t by = std::int64_t(std::floor(a.y / r));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = buckets.find(bucket_key(bx + dx, by + dy));
        if (it == buckets.end()) continue;
        for (const std::int32_t j : it->second)
          if (j > i) candidates.push_back(j);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const std::int32_t j : candidates) {
      const Point2& b = rm.nodes_[j];
      const double len = distance(a, b);
      if (len > r || len == 0.0) continue;
      if (!grid.segment_free(a, b, params.robot_radius, params.collision_spacing)) continue;
      rm.edges_.push_back({i, j, len});
      rm.edges_.push_back({j, i, len});
    }
  }

  rm.build_adjacency();
  return rm;
}

void Roadmap::build_adjacency() {
  in_edges_.assign(nodes_.size(), {});
  for (std::int32_t e = 0; e < int(edges_.size()); ++e) in_edges_[edges_[e].to].push_back(e);
  for (auto& ids : in_edges_) {
    std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
      return edges_[a].from != edges_[b].from ? edges_[a].from < edges_[b].from : a < b;
    });
  }
}

std::vector<std::int32_t> Roadmap::in_neighbors(int node) const {
  if (node < 0 || node >= num_nodes()) throw std::out_of_range("roadmap: unknown node id");
  std::vector<std::int32_t> out;
  out.reserve(in_edges_[node].size());
  for (const std::int32_t e : in_edges_[node]) out.push_back(edges_[e].from);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Roadmap::max_in_degree() const {
  std::size_t m = 0;
  for (const auto& ids : in_edges_) m = std::max(m, ids.size());
  return int(m);
}

std::uint64_t Roadmap::geometry_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(std::uint64_t(nodes_.size()));
  mix(std::uint64_t(edges_.size()));
  mix(std::uint64_t(source_));
  mix(std::uint64_t(goal_));
  for (const auto& p : nodes_) {
    mix(std::bit_cast<std::uint64_t>(p.x));
    mix(std::bit_cast<std::uint64_t>(p.y));
  }
  for (const auto& e : edges_) {
    mix(std::uint64_t(std::uint32_t(e.from)) << 32 | std::uint32_t(e.to));
  }
  return h;
}

}  // namespace bcplan
