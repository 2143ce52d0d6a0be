#ifndef TGX_TESTS_HELPERS_HPP
#define TGX_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "rng.hpp"
#include "schedule.hpp"

namespace tgx::test {

// All-pairs shortest paths by relaxation; the independent distance oracle.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(
    NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  const std::int64_t inf = 1 << 28;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (NodeId v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Naive window oracle: dense per-step presence sets, literal intersection,
// reachability by depth-first search. Deliberately shares nothing with the
// library implementation.
inline WindowVerdict naive_verify(const PortGraph& g, const FixedSchedule& s,
                                  std::int64_t T) {
  const std::int64_t H = s.horizon();
  std::vector<std::set<EdgeId>> present(H);
  for (std::int64_t t = 0; t < H; ++t)
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (s.present(e, t)) present[t].insert(e);
  for (std::int64_t t = 0; t + T <= H; ++t) {
    std::set<EdgeId> inter = present[t];
    for (std::int64_t i = t + 1; i < t + T; ++i) {
      std::set<EdgeId> next;
      for (EdgeId e : inter)
        if (present[i].count(e)) next.insert(e);
      inter = next;
    }
    std::vector<std::vector<NodeId>> adj(g.node_count());
    for (EdgeId e : inter) {
      adj[g.edge(e).u].push_back(g.edge(e).v);
      adj[g.edge(e).v].push_back(g.edge(e).u);
    }
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != g.node_count()) return {false, t};
  }
  return {true, 0};
}

// Path 0-1-2 with the default port labels.
inline PortGraph path3() {
  return PortGraph::from_pairs(3, {{0, 1}, {1, 2}});
}

inline FixedSchedule static_schedule(const PortGraph& g, std::int64_t horizon) {
  return FixedSchedule(g.edge_count(), horizon, std::nullopt);
}

// Four-cycle where edge {0,1} is absent at even steps and edge {2,3} at odd
// steps.
inline Instance alternating_c4(std::int64_t horizon) {
  PortGraph g = PortGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  FixedSchedule s(g.edge_count(), horizon, std::nullopt);
  const EdgeId e01 = g.edge_between(0, 1);
  const EdgeId e23 = g.edge_between(2, 3);
  for (std::int64_t t = 0; t < horizon; ++t) {
    if (t % 2 == 0) s.add_absence(e01, t, t);
    if (t % 2 == 1) s.add_absence(e23, t, t);
  }
  return {std::move(g), std::move(s), std::nullopt, std::nullopt};
}

// Random connected graph (tree plus extras), for small-n property tests.
inline std::vector<std::pair<NodeId, NodeId>> random_connected_pairs(
    NodeId n, std::size_t m, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::set<EdgeKey> taken;
  for (NodeId v = 1; v < n; ++v) {
    const NodeId u = static_cast<NodeId>(rng.below(v));
    pairs.emplace_back(u, v);
    taken.insert(EdgeKey(u, v));
  }
  while (pairs.size() < m) {
    const NodeId u = static_cast<NodeId>(rng.below(n));
    const NodeId v = static_cast<NodeId>(rng.below(n));
    if (u == v || !taken.insert(EdgeKey(u, v)).second) continue;
    pairs.emplace_back(u, v);
  }
  return pairs;
}

// Random schedule over a random connected graph; edges wink out in random
// short intervals with no connectivity promise.
inline Instance random_schedule_instance(Rng& rng, NodeId max_n,
                                         std::int64_t horizon) {
  const NodeId n = static_cast<NodeId>(3 + rng.below(max_n - 2));
  const std::size_t full = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t m =
      std::min<std::size_t>(full, n - 1 + rng.below(n + 1));
  auto pairs = random_connected_pairs(n, m, rng);
  PortGraph g = PortGraph::from_pairs(n, pairs);
  FixedSchedule s(g.edge_count(), horizon, std::nullopt);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::int64_t t = 0;
    while (t < horizon) {
      if (rng.real01() < 0.2) {
        const std::int64_t len = rng.range(1, 3);
        const std::int64_t end = std::min(horizon - 1, t + len - 1);
        s.add_absence(e, t, end);
        t = end + 2;
      } else {
        t += 1 + static_cast<std::int64_t>(rng.below(4));
      }
    }
  }
  return {std::move(g), std::move(s), std::nullopt, std::nullopt};
}

}  // namespace tgx::test

#endif
