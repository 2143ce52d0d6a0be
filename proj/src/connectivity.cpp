#include "connectivity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "error.hpp"

namespace tgx {

AdjacencyList AdjacencyList::from_pairs(
    NodeId n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  AdjacencyList g;
  g.nbrs.assign(n, {});
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) fail(Errc::Range, "adjacency: endpoint out of range");
    g.nbrs[u].push_back(v);
    g.nbrs[v].push_back(u);
  }
  for (auto& lst : g.nbrs) std::sort(lst.begin(), lst.end());
  return g;
}

std::vector<std::int64_t> bfs_distances(const AdjacencyList& g, NodeId src) {
  const std::size_t n = g.nbrs.size();
  if (src >= n) fail(Errc::Range, "bfs: source out of range");
  std::vector<std::int64_t> dist(n, kUnreachable);
  std::deque<NodeId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId u : g.nbrs[v])
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

bool is_connected(const AdjacencyList& g) {
  if (g.nbrs.empty()) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::int64_t d) { return d == kUnreachable; });
}

std::vector<EdgeId> intersection_edges(const PortGraph& g,
                                       const FixedSchedule& s, std::int64_t a,
                                       std::int64_t b) {
  if (a > b || a < 0 || b >= s.horizon())
    fail(Errc::Range, "window outside realized horizon");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (s.present_throughout(e, a, b)) out.push_back(e);
  return out;
}

namespace {

struct UnionFind {
  std::vector<NodeId> parent;
  explicit UnionFind(NodeId n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

WindowVerdict verify_interval_connectivity(const PortGraph& g,
                                           const FixedSchedule& s,
                                           std::int64_t T) {
  if (T < 1) fail(Errc::InvalidArgument, "window size must be at least 1");
  if (s.horizon() < T) fail(Errc::Range, "horizon shorter than window size");
  const NodeId n = g.node_count();
  for (std::int64_t t = 0; t + T <= s.horizon(); ++t) {
    UnionFind uf(n);
    NodeId components = n;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (s.present_throughout(e, t, t + T - 1) &&
          uf.unite(g.edge(e).u, g.edge(e).v))
        --components;
    if (components != 1) return {false, t};
  }
  return {true, 0};
}

}  // namespace tgx
