#ifndef TGX_ADVERSARIES_CONFINEMENT_HPP
#define TGX_ADVERSARIES_CONFINEMENT_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "graph.hpp"

namespace tgx {

/// Builds the complete graph on `members` minus the edge between the two
/// gates, as (u, v) pairs. Gates must be members.
std::vector<std::pair<NodeId, NodeId>> gadget_edges(
    const std::vector<NodeId>& members, NodeId gate_u, NodeId gate_v);

/// The blocking strategy played inside one gadget. Maintains blocked and
/// recently-visited node sets; before every agent move, all edges between the
/// current node and blocked nodes are deleted, so blocked nodes (the gates
/// from the start) stay unreachable until the strategy has run its course.
/// Whenever every non-blocked node but one has been visited since the last
/// update, the leftover node joins the blocked set. The strategy is done once
/// only two non-gate members remain unblocked; deletions then freeze.
class GadgetConfinement {
 public:
  GadgetConfinement(const PortGraph& g, std::vector<NodeId> members,
                    NodeId gate_u, NodeId gate_v);

  /// (Re)starts with fresh state; the agent sits at `agent_pos` (a member).
  void start(NodeId agent_pos);

  /// Forgets all state and deletions (used when a confinement phase ends).
  void clear();

  bool active() const { return active_; }
  bool strategy_done() const { return done_; }

  /// Step-1 deletions for the step the agent is about to take.
  void pre_move(NodeId at);

  /// Bookkeeping after the agent's move.
  void post_move(NodeId arrived);

  const std::set<EdgeId>& deleted() const { return deleted_; }
  const std::set<NodeId>& blocked() const { return blocked_; }

  /// Minimum number of agent moves before the strategy can complete:
  /// sum over k in [2..g-3] of (g-2-k).
  static std::int64_t guaranteed_moves(std::size_t gadget_size);

 private:
  const PortGraph& g_;
  std::vector<NodeId> members_;
  std::set<NodeId> member_set_;
  NodeId u_, v_;
  std::set<NodeId> blocked_, recent_;
  std::set<EdgeId> deleted_;
  bool active_ = false;
  bool done_ = false;
};

}  // namespace tgx

#endif
