#include "graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "error.hpp"

namespace tgx {

PortGraph PortGraph::from_pairs(
    NodeId n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  // Assign ports by ascending neighbor id, the default labeling rule.
  std::vector<std::set<NodeId>> nbrs(n);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) fail(Errc::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(Errc::InvalidArgument, "self-loops are not allowed");
    if (!nbrs[u].insert(v).second)
      fail(Errc::InvalidArgument, "parallel edge in edge list");
    nbrs[v].insert(u);
  }
  std::vector<std::map<NodeId, Port>> port_of(n);
  for (NodeId v = 0; v < n; ++v) {
    Port p = 1;
    for (NodeId u : nbrs[v]) port_of[v][u] = p++;
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs)
    edges.push_back(Edge{u, v, port_of[u][v], port_of[v][u]});
  return from_edges(n, std::move(edges));
}

PortGraph PortGraph::from_edges(NodeId n, std::vector<Edge> edges) {
  PortGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_index();
  g.validate();
  return g;
}

void PortGraph::build_index() {
  adj_.assign(n_, {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n_ || ed.v >= n_)
      fail(Errc::InvalidArgument, "edge endpoint out of range");
    if (ed.u == ed.v) fail(Errc::InvalidArgument, "self-loops are not allowed");
    adj_[ed.u].push_back(Incidence{ed.pu, ed.v, e});
    adj_[ed.v].push_back(Incidence{ed.pv, ed.u, e});
  }
  for (auto& inc : adj_)
    std::sort(inc.begin(), inc.end(),
              [](const Incidence& a, const Incidence& b) { return a.port < b.port; });
}

void PortGraph::validate() const {
  std::set<EdgeKey> seen;
  for (const Edge& e : edges_)
    if (!seen.insert(EdgeKey(e.u, e.v)).second)
      fail(Errc::InvalidArgument, "parallel edge in edge list");

  for (NodeId v = 0; v < n_; ++v) {
    const auto& inc = adj_[v];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (inc[i].port != static_cast<Port>(i) + 1)
        fail(Errc::InvalidArgument,
             "ports at node " + std::to_string(v) +
                 " are not a bijection onto 1..degree");
    }
  }

  if (n_ == 0) fail(Errc::InvalidArgument, "graph must have at least one node");
  // Connectivity; every instance lives on a connected underlying graph.
  std::vector<char> vis(n_, 0);
  std::vector<NodeId> stack{0};
  vis[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (const auto& i : adj_[v])
      if (!vis[i.neighbor]) {
        vis[i.neighbor] = 1;
        ++count;
        stack.push_back(i.neighbor);
      }
  }
  if (count != n_) fail(Errc::InvalidArgument, "underlying graph is disconnected");
}

int PortGraph::degree(NodeId v) const {
  if (v >= n_) fail(Errc::Range, "node id out of range");
  return static_cast<int>(adj_[v].size());
}

bool PortGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& inc = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& i : inc)
    if (i.neighbor == other) return true;
  return false;
}

EdgeId PortGraph::edge_between(NodeId u, NodeId v) const {
  if (u < n_ && v < n_)
    for (const auto& i : adj_[u])
      if (i.neighbor == v) return i.edge;
  fail(Errc::Range, "no such edge");
}

Port PortGraph::port_to(NodeId v, NodeId u) const {
  if (v < n_)
    for (const auto& i : adj_[v])
      if (i.neighbor == u) return i.port;
  fail(Errc::Range, "no such edge");
}

NodeId PortGraph::neighbor_at(NodeId v, Port p) const {
  if (v >= n_ || p < 1 || p > static_cast<Port>(adj_[v].size()))
    fail(Errc::Range, "port out of range");
  return adj_[v][static_cast<std::size_t>(p) - 1].neighbor;
}

EdgeId PortGraph::edge_at_port(NodeId v, Port p) const {
  if (v >= n_ || p < 1 || p > static_cast<Port>(adj_[v].size()))
    fail(Errc::Range, "port out of range");
  return adj_[v][static_cast<std::size_t>(p) - 1].edge;
}

}  // namespace tgx
