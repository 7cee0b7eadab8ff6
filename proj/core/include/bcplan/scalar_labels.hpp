#pragma once

#include <cstdint>
#include <vector>

#include "bcplan/costs.hpp"

namespace bcplan {

enum class LeadCost { Primary, Secondary };

/// One direction of the two label-setting passes: the optimal lead value per
/// node plus the best follow value restricted to lead-optimal paths, with the
/// predecessor trees realizing each.
struct LeadLabels {
  std::vector<double> lead;
  std::vector<double> restricted_follow;
  std::vector<std::int32_t> lead_tree;        // pred edge per node (-1 at source/unreachable)
  std::vector<std::int32_t> restricted_tree;  // achieves (lead, restricted_follow)
  int tie_adjustments = 0;  // argmin memberships admitted only by the tolerance
};

/// Dijkstra over the lead weights, then a restricted sweep over the
/// within-tolerance argmin in-edges for the follow weights. Unreachable nodes
/// carry +infinity. tie_tol is the relative tolerance deciding argmin
/// membership of candidate in-edges.
LeadLabels dijkstra_pair(const WeightedGraph& g, LeadCost lead, double tie_tol = 1e-9);

/// The four per-node values of the bi-criteria problem:
///  - min_primary: unconstrained optimum of the primary cost.
///  - secondary_at_min_primary: cheapest secondary among primary-optimal paths.
///  - min_secondary / primary_at_min_secondary: the symmetric pair.
struct ScalarLabels {
  std::vector<double> min_primary;
  std::vector<double> secondary_at_min_primary;
  std::vector<double> min_secondary;
  std::vector<double> primary_at_min_secondary;
  std::vector<std::int32_t> primary_tree;
  std::vector<std::int32_t> primary_restricted_tree;    // achieves (min_primary, secondary_at_min_primary)
  std::vector<std::int32_t> secondary_tree;
  std::vector<std::int32_t> secondary_restricted_tree;  // achieves (primary_at_min_secondary, min_secondary)
  int tie_adjustments_primary = 0;
  int tie_adjustments_secondary = 0;

  bool reachable(int node) const;
};

ScalarLabels compute_scalar_labels(const WeightedGraph& g, double tie_tol = 1e-9);

/// Largest finite secondary_at_min_primary over all nodes; the budget that
/// recovers the full trade-off curve for every node. Throws when no node is
/// reachable.
double max_secondary_at_min_primary(const ScalarLabels& labels);

/// Replays graph costs along a predecessor tree from `node` back to the
/// source; returns the node sequence source..node.
std::vector<std::int32_t> tree_path(const WeightedGraph& g, const std::vector<std::int32_t>& tree,
                                    int node);

}  // namespace bcplan
