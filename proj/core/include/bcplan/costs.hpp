#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bcplan/geometry.hpp"
#include "bcplan/roadmap.hpp"

namespace bcplan {

/// Inverse-square threat source: level s/r^2 inside the minimum radius,
/// s/d^2 between r and the visibility radius R, s/R^2 beyond it.
struct Threat {
  Point2 position;
  double severity = 1.0;
  double min_radius = 0.0;
  double visibility_radius = std::numeric_limits<double>::infinity();
};

void validate_threat(const Threat& t);

struct CostModel {
  std::vector<Threat> threats;
  int quadrature_samples = 32;
  bool visibility = false;
  // Floor level where line of sight to a threat is blocked; must be > 0 when
  // visibility is enabled. The conventional default is 1/Area of the map.
  double epsilon = 0.0;
  // Exchange the roles of the two criteria (primary <- exposure, secondary <- distance).
  bool swap_costs = false;
};

struct GraphEdge {
  std::int32_t from = -1;
  std::int32_t to = -1;
};

/// Directed graph with strictly positive primary/secondary edge costs; the
/// shared substrate of the label and budget solvers. Node positions are
/// optional (empty for abstract graphs from explicit edge lists).
struct WeightedGraph {
  int node_count = 0;
  int source = -1;
  int goal = -1;
  std::vector<Point2> positions;  // empty or node_count entries
  std::vector<GraphEdge> edges;
  std::vector<double> primary;
  std::vector<double> secondary;
  std::vector<std::vector<std::int32_t>> in_edges;   // sorted by (from, edge id)
  std::vector<std::vector<std::int32_t>> out_edges;  // sorted by (to, edge id)

  int num_nodes() const { return node_count; }
  void rebuild_adjacency();

  struct EdgeSpec {
    std::int32_t from;
    std::int32_t to;
    double primary;
    double secondary;
  };
  static WeightedGraph from_lists(int node_count, int source, int goal,
                                  const std::vector<EdgeSpec>& edges,
                                  std::vector<Point2> positions = {});
};

double distance_cost(const Point2& a, const Point2& b);

/// Summed instantaneous exposure of all threats at x.
double threat_level(std::span<const Threat> threats, const Point2& x);

/// Visibility-limited variant: a threat occluded from x contributes epsilon.
double threat_level_visible(std::span<const Threat> threats, const OccupancyGrid& grid,
                            const Point2& x, double epsilon);

double default_visibility_epsilon(const OccupancyGrid& grid);

/// Path integral of the exposure along edge [a, b], composite midpoint rule
/// with model.quadrature_samples points. Uses the visibility-limited field
/// when model.visibility is set (grid required).
double edge_threat_cost(const Point2& a, const Point2& b, const CostModel& model,
                        const OccupancyGrid* grid);

/// Primary = distance, secondary = threat exposure (or exchanged when
/// model.swap_costs). Throws if any computed weight is not strictly positive.
WeightedGraph assign_costs(const Roadmap& rm, const CostModel& model, const OccupancyGrid* grid);

struct MinEdgeCosts {
  double primary = std::numeric_limits<double>::infinity();
  double secondary = std::numeric_limits<double>::infinity();
};
MinEdgeCosts min_edge_costs(const WeightedGraph& g);

}  // namespace bcplan
