// Shared label-setting engine for the true-cost and quantized-cost passes.
// Lead/Follow weight types are double or int64; integer leads use exact tie
// detection, floating leads a relative tolerance.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

#include "bcplan/costs.hpp"

namespace bcplan::detail {

template <class T>
constexpr T unreachable_v =
    std::numeric_limits<T>::has_infinity ? std::numeric_limits<T>::infinity()
                                         : std::numeric_limits<T>::max();

template <class T>
bool is_reached(T v) {
  return v != unreachable_v<T>;
}

template <class Lead, class Follow>
struct PairLabels {
  std::vector<Lead> lead;
  std::vector<Follow> restricted;
  std::vector<std::int32_t> lead_tree;
  std::vector<std::int32_t> restricted_tree;
  int tie_adjustments = 0;
};

template <class Lead, class Follow>
PairLabels<Lead, Follow> label_pair(const WeightedGraph& g, const std::vector<Lead>& lead_w,
                                    const std::vector<Follow>& follow_w, double tie_tol) {
  const int n = g.num_nodes();
  PairLabels<Lead, Follow> out;
  out.lead.assign(n, unreachable_v<Lead>);
  out.restricted.assign(n, unreachable_v<Follow>);
  out.lead_tree.assign(n, -1);
  out.restricted_tree.assign(n, -1);

  using Entry = std::pair<Lead, std::int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::vector<char> settled(n, 0);
  out.lead[g.source] = Lead(0);
  heap.push({Lead(0), std::int32_t(g.source)});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const std::int32_t e : g.out_edges[u]) {
      const std::int32_t v = g.edges[e].to;
      const Lead cand = d + lead_w[e];
      if (cand < out.lead[v]) {
        out.lead[v] = cand;
        out.lead_tree[v] = e;
        heap.push({cand, v});
      }
    }
  }

  // Within-tolerance argmin membership of an in-edge against the settled lead
  // value. Positive weights make the restricted relation acyclic, so one
  // sweep in ascending lead order computes the restricted values.
  const auto within_tie = [&](Lead cand, Lead best, bool& by_tolerance) {
    if constexpr (std::is_floating_point_v<Lead>) {
      if (cand == best) return true;
      by_tolerance = cand <= best * (Lead(1) + Lead(tie_tol));
      return by_tolerance;
    } else {
      (void)tie_tol;
      (void)by_tolerance;
      return cand == best;
    }
  };

  std::vector<std::int32_t> order;
  order.reserve(n);
  for (std::int32_t j = 0; j < n; ++j)
    if (is_reached(out.lead[j])) order.push_back(j);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return out.lead[a] != out.lead[b] ? out.lead[a] < out.lead[b] : a < b;
  });

  std::vector<char> done(n, 0);
  for (const std::int32_t j : order) {
    if (j == g.source) {
      out.restricted[j] = Follow(0);
      done[j] = 1;
      continue;
    }
    const Lead best = out.lead[j];
    Follow best_follow = unreachable_v<Follow>;
    std::int32_t best_edge = -1;
    for (const std::int32_t e : g.in_edges[j]) {
      const std::int32_t i = g.edges[e].from;
      if (!is_reached(out.lead[i])) continue;
      bool by_tolerance = false;
      const Lead cand = out.lead[i] + lead_w[e];
      if (!within_tie(cand, best, by_tolerance)) continue;
      if (!done[i]) {
        // Degenerate near-zero-weight tie; the in-neighbor is not final yet.
        ++out.tie_adjustments;
        continue;
      }
      if (by_tolerance) ++out.tie_adjustments;
      const Follow f = out.restricted[i] + follow_w[e];
      if (f < best_follow) {
        best_follow = f;
        best_edge = e;
      }
    }
    out.restricted[j] = best_follow;
    out.restricted_tree[j] = best_edge;
    done[j] = 1;
  }
  return out;
}

}  // namespace bcplan::detail
