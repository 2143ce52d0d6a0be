#ifndef TGX_AGENTS_MAP_STATE_HPP
#define TGX_AGENTS_MAP_STATE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace tgx {

/// The agent-side picture of the network: observed and visited node sets, the
/// learned partial port map, and the ports seen unavailable at least once.
/// The two map edge sets are maintained incrementally:
///   tier 1 - both endpoints visited, both directed ports known, neither
///            deleted at its endpoint;
///   tier 2 - one endpoint visited, the other only observed, the visited
///            side's port known and not deleted.
class MapState {
 public:
  /// Adds `node` to the visited (and mapped) sets and records its degree.
  void note_visit(NodeId node, int degree);

  /// Adds `node` to the mapped set only.
  void note_observed(NodeId node);

  /// Records lambda_at(to) = p. Rejects contradictory rebindings.
  void learn_port(NodeId at, NodeId to, Port p);

  /// Marks port p at `at` as having been unavailable at least once.
  void delete_port(NodeId at, Port p);

  /// Clears every deleted-port set; used by the zero-hop explorer's rounds.
  void reset_deleted_ports();

  bool visited(NodeId v) const { return vvis_.count(v) != 0; }
  bool mapped(NodeId v) const { return vmap_.count(v) != 0; }
  const std::set<NodeId>& vmap() const { return vmap_; }
  const std::set<NodeId>& vvis() const { return vvis_; }
  bool fully_visited() const { return vmap_.size() == vvis_.size(); }

  std::optional<Port> lambda(NodeId u, NodeId v) const;
  std::optional<NodeId> port_partner(NodeId u, Port p) const;
  bool port_deleted(NodeId v, Port p) const;
  std::optional<int> degree_of(NodeId v) const;
  int used_port_count(NodeId v) const;

  const std::set<EdgeKey>& tier1() const { return e1_; }
  const std::set<EdgeKey>& tier2() const { return e2_; }

  /// Smallest port at v that is neither mapped to a neighbor nor deleted,
  /// if any. Requires a known degree (visited nodes only).
  std::optional<Port> smallest_open_port(NodeId v) const;

  /// Number of ports at v not yet mapped to any neighbor.
  int open_port_count(NodeId v) const;

 private:
  void refresh_pair(NodeId u, NodeId v);

  std::set<NodeId> vmap_, vvis_;
  std::map<NodeId, int> degree_;
  std::map<NodeId, std::map<NodeId, Port>> lambda_;   // lambda_[u][v]
  std::map<NodeId, std::map<Port, NodeId>> partner_;  // inverse of lambda_
  std::map<NodeId, std::set<Port>> deleted_;
  std::map<NodeId, std::set<NodeId>> touching_;  // nodes sharing a known pair
  std::set<EdgeKey> e1_, e2_;
};

/// First hop of the lexicographically-least shortest path from `from` to the
/// closest of `targets` (ties on distance broken by lowest node id) inside
/// the graph spanned by `edges`. Empty when no target is reachable.
std::optional<NodeId> next_hop_to_closest(const std::set<EdgeKey>& edges,
                                          NodeId from,
                                          const std::set<NodeId>& targets);

}  // namespace tgx

#endif
