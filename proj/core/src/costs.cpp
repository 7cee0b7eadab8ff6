#include "bcplan/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bcplan {

void validate_threat(const Threat& t) {
  if (!(t.severity > 0.0)) throw std::invalid_argument("threat: severity must be > 0");
  if (!(t.min_radius >= 0.0)) throw std::invalid_argument("threat: min_radius must be >= 0");
  if (!(t.visibility_radius > t.min_radius))
    throw std::invalid_argument("threat: visibility_radius must exceed min_radius");
  if (!std::isfinite(t.position.x) || !std::isfinite(t.position.y))
    throw std::invalid_argument("threat: position must be finite");
}

void WeightedGraph::rebuild_adjacency() {
  in_edges.assign(node_count, {});
  out_edges.assign(node_count, {});
  for (std::int32_t e = 0; e < int(edges.size()); ++e) {
    in_edges[edges[e].to].push_back(e);
    out_edges[edges[e].from].push_back(e);
  }
  for (auto& ids : in_edges)
    std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
      return edges[a].from != edges[b].from ? edges[a].from < edges[b].from : a < b;
    });
  for (auto& ids : out_edges)
    std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
      return edges[a].to != edges[b].to ? edges[a].to < edges[b].to : a < b;
    });
}

WeightedGraph WeightedGraph::from_lists(int node_count, int source, int goal,
                                        const std::vector<EdgeSpec>& specs,
                                        std::vector<Point2> positions) {
  if (node_count <= 0) throw std::invalid_argument("graph: node_count must be > 0");
  if (source < 0 || source >= node_count) throw std::invalid_argument("graph: bad source id");
  if (goal < 0 || goal >= node_count) throw std::invalid_argument("graph: bad goal id");
  if (!positions.empty() && int(positions.size()) != node_count)
    throw std::invalid_argument("graph: positions size mismatch");
  WeightedGraph g;
  g.node_count = node_count;
  g.source = source;
  g.goal = goal;
  g.positions = std::move(positions);
  g.edges.reserve(specs.size());
  g.primary.reserve(specs.size());
  g.secondary.reserve(specs.size());
  for (const auto& s : specs) {
    if (s.from < 0 || s.from >= node_count || s.to < 0 || s.to >= node_count)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (s.from == s.to) throw std::invalid_argument("graph: self-transition");
    if (!(s.primary > 0.0) || !(s.secondary > 0.0))
      throw std::invalid_argument("graph: edge costs must be strictly positive");
    g.edges.push_back({s.from, s.to});
    g.primary.push_back(s.primary);
    g.secondary.push_back(s.secondary);
  }
  g.rebuild_adjacency();
  return g;
}

double distance_cost(const Point2& a, const Point2& b) {
  const double d = distance(a, b);
  if (!(d > 0.0)) throw std::runtime_error("distance_cost: zero-length edge");
  return d;
}

namespace {

double single_threat_level(const Threat& t, const Point2& x) {
  const double d = distance(x, t.position);
  if (d <= t.min_radius) {
    if (t.min_radius > 0.0) return t.severity / (t.min_radius * t.min_radius);
    throw std::runtime_error("threat_level: sample point coincides with a zero-radius threat");
  }
  if (d < t.visibility_radius) return t.severity / (d * d);
  return t.severity / (t.visibility_radius * t.visibility_radius);
}

}  // namespace

double threat_level(std::span<const Threat> threats, const Point2& x) {
  double sum = 0.0;
  for (const auto& t : threats) sum += single_threat_level(t, x);
  return sum;
}

double threat_level_visible(std::span<const Threat> threats, const OccupancyGrid& grid,
                            const Point2& x, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("threat_level_visible: epsilon must be > 0");
  double sum = 0.0;
  for (const auto& t : threats)
    sum += grid.line_of_sight(x, t.position) ? single_threat_level(t, x) : epsilon;
  return sum;
}

double default_visibility_epsilon(const OccupancyGrid& grid) {
  return 1.0 / (grid.extent_x() * grid.extent_y());
}

double edge_threat_cost(const Point2& a, const Point2& b, const CostModel& model,
                        const OccupancyGrid* grid) {
  const double len = distance(a, b);
  if (!(len > 0.0)) throw std::runtime_error("edge_threat_cost: zero-length edge");
  if (model.quadrature_samples < 2)
    throw std::invalid_argument("edge_threat_cost: need at least 2 quadrature samples");
  if (model.visibility && grid == nullptr)
    throw std::invalid_argument("edge_threat_cost: visibility model requires a grid");

  const int q = model.quadrature_samples;
  double sum = 0.0;
  for (int k = 0; k < q; ++k) {
    const double t = (double(k) + 0.5) / double(q);
    const Point2 p{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
    sum += model.visibility ? threat_level_visible(model.threats, *grid, p, model.epsilon)
                            : threat_level(model.threats, p);
  }
  return len * sum / double(q);
}

WeightedGraph assign_costs(const Roadmap& rm, const CostModel& model, const OccupancyGrid* grid) {
  for (const auto& t : model.threats) validate_threat(t);
  if (model.visibility && !(model.epsilon > 0.0))
    throw std::invalid_argument("assign_costs: visibility requires epsilon > 0");

  WeightedGraph g;
  g.node_count = rm.num_nodes();
  g.source = rm.source_id();
  g.goal = rm.goal_id();
  g.positions = rm.nodes();
  g.edges.reserve(rm.edges().size());
  g.primary.resize(rm.edges().size());
  g.secondary.resize(rm.edges().size());

  for (std::size_t e = 0; e < rm.edges().size(); ++e) {
    const auto& edge = rm.edges()[e];
    g.edges.push_back({edge.from, edge.to});
    const Point2& a = rm.nodes()[edge.from];
    const Point2& b = rm.nodes()[edge.to];
    const double dist = distance_cost(a, b);
    const double threat = edge_threat_cost(a, b, model, grid);
    const double c_primary = model.swap_costs ? threat : dist;
    const double c_secondary = model.swap_costs ? dist : threat;
    if (!(c_primary > 0.0) || !(c_secondary > 0.0))
      throw std::runtime_error("assign_costs: nonpositive weight on edge " + std::to_string(e));
    g.primary[e] = c_primary;
    g.secondary[e] = c_secondary;
  }
  g.rebuild_adjacency();
  return g;
}

MinEdgeCosts min_edge_costs(const WeightedGraph& g) {
  MinEdgeCosts m;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    m.primary = std::min(m.primary, g.primary[e]);
    m.secondary = std::min(m.secondary, g.secondary[e]);
  }
  return m;
}

}  // namespace bcplan
