#ifndef TGX_GRAPH_HPP
#define TGX_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace tgx {

using NodeId = std::uint32_t;
using Port = std::int32_t;
using EdgeId = std::size_t;

/// Unordered node pair normalized to u < v; identifies an underlying edge.
struct EdgeKey {
  NodeId a, b;
  EdgeKey(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// One undirected edge with its two local port labels: pu at u, pv at v.
struct Edge {
  NodeId u, v;
  Port pu, pv;
};

/// Static simple connected graph with a port bijection at every node:
/// the edges incident to v are labeled by exactly the ports 1..degree(v).
/// Immutable after construction.
class PortGraph {
 public:
  /// Empty placeholder; real graphs come from the named constructors.
  PortGraph() = default;

  /// Builds with ports assigned by ascending neighbor id at each node.
  static PortGraph from_pairs(NodeId n,
                              const std::vector<std::pair<NodeId, NodeId>>& pairs);

  /// Builds from explicit port labels; validates the bijections.
  static PortGraph from_edges(NodeId n, std::vector<Edge> edges);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  int degree(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;
  EdgeId edge_between(NodeId u, NodeId v) const;

  /// lambda_v(u); throws if {u,v} is not an edge.
  Port port_to(NodeId v, NodeId u) const;

  /// N(v, p); throws if p is not in [1..degree(v)].
  NodeId neighbor_at(NodeId v, Port p) const;

  /// Edge id reached from v through port p.
  EdgeId edge_at_port(NodeId v, Port p) const;

  /// Incident (port, neighbor, edge id) triples sorted by port.
  struct Incidence {
    Port port;
    NodeId neighbor;
    EdgeId edge;
  };
  const std::vector<Incidence>& incident(NodeId v) const { return adj_[v]; }

 private:
  void build_index();
  void validate() const;

  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;  // per node, sorted by port
};

}  // namespace tgx

#endif
