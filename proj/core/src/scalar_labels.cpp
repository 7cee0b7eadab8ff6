#include "bcplan/scalar_labels.hpp"

#include <algorithm>
#include <stdexcept>

#include "label_setting.hpp"

namespace bcplan {

LeadLabels dijkstra_pair(const WeightedGraph& g, LeadCost lead, double tie_tol) {
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!(g.primary[e] > 0.0) || !(g.secondary[e] > 0.0))
      throw std::invalid_argument("dijkstra_pair: edge weights must be strictly positive");
  const auto& lw = lead == LeadCost::Primary ? g.primary : g.secondary;
  const auto& fw = lead == LeadCost::Primary ? g.secondary : g.primary;
  auto r = detail::label_pair<double, double>(g, lw, fw, tie_tol);
  LeadLabels out;
  out.lead = std::move(r.lead);
  out.restricted_follow = std::move(r.restricted);
  out.lead_tree = std::move(r.lead_tree);
  out.restricted_tree = std::move(r.restricted_tree);
  out.tie_adjustments = r.tie_adjustments;
  return out;
}

bool ScalarLabels::reachable(int node) const {
  return min_primary[node] != detail::unreachable_v<double>;
}

ScalarLabels compute_scalar_labels(const WeightedGraph& g, double tie_tol) {
  auto p = dijkstra_pair(g, LeadCost::Primary, tie_tol);
  auto s = dijkstra_pair(g, LeadCost::Secondary, tie_tol);
  ScalarLabels out;
  out.min_primary = std::move(p.lead);
  out.secondary_at_min_primary = std::move(p.restricted_follow);
  out.primary_tree = std::move(p.lead_tree);
  out.primary_restricted_tree = std::move(p.restricted_tree);
  out.min_secondary = std::move(s.lead);
  out.primary_at_min_secondary = std::move(s.restricted_follow);
  out.secondary_tree = std::move(s.lead_tree);
  out.secondary_restricted_tree = std::move(s.restricted_tree);
  out.tie_adjustments_primary = p.tie_adjustments;
  out.tie_adjustments_secondary = s.tie_adjustments;
  return out;
}

double max_secondary_at_min_primary(const ScalarLabels& labels) {
  double best = -1.0;
  for (const double v : labels.secondary_at_min_primary)
    if (v != detail::unreachable_v<double>) best = std::max(best, v);
  if (best < 0.0) throw std::runtime_error("max_secondary_at_min_primary: no reachable node");
  return best;
}

std::vector<std::int32_t> tree_path(const WeightedGraph& g, const std::vector<std::int32_t>& tree,
                                    int node) {
  std::vector<std::int32_t> path;
  std::int32_t cur = node;
  path.push_back(cur);
  while (cur != g.source) {
    const std::int32_t e = tree[cur];
    if (e < 0) throw std::runtime_error("tree_path: node not connected to source");
    cur = g.edges[e].from;
    path.push_back(cur);
    if (path.size() > std::size_t(g.num_nodes()) + 1)
      throw std::runtime_error("tree_path: cycle in predecessor tree");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace bcplan
