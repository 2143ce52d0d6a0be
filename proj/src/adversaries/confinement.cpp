#include "adversaries/confinement.hpp"

#include <algorithm>

#include "error.hpp"

namespace tgx {

std::vector<std::pair<NodeId, NodeId>> gadget_edges(
    const std::vector<NodeId>& members, NodeId gate_u, NodeId gate_v) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const NodeId a = members[i], b = members[j];
      if ((a == gate_u && b == gate_v) || (a == gate_v && b == gate_u)) continue;
      out.emplace_back(a, b);
    }
  return out;
}

GadgetConfinement::GadgetConfinement(const PortGraph& g,
                                     std::vector<NodeId> members, NodeId gate_u,
                                     NodeId gate_v)
    : g_(g), members_(std::move(members)), u_(gate_u), v_(gate_v) {
  if (members_.size() < 6)
    fail(Errc::InvalidArgument, "gadget needs at least 6 nodes");
  member_set_.insert(members_.begin(), members_.end());
  if (!member_set_.count(u_) || !member_set_.count(v_))
    fail(Errc::InvalidArgument, "gates must be gadget members");
}

void GadgetConfinement::start(NodeId agent_pos) {
  if (!member_set_.count(agent_pos) || agent_pos == u_ || agent_pos == v_)
    fail(Errc::InvalidArgument, "confinement must start at a trap");
  active_ = true;
  done_ = false;
  blocked_ = {u_, v_};
  recent_ = {agent_pos};
  deleted_.clear();
}

void GadgetConfinement::clear() {
  active_ = false;
  done_ = false;
  blocked_.clear();
  recent_.clear();
  deleted_.clear();
}

void GadgetConfinement::pre_move(NodeId at) {
  if (!active_ || done_) return;
  if (!member_set_.count(at)) fail(Errc::Internal, "agent escaped the gadget");
  for (NodeId w : blocked_)
    if (g_.has_edge(at, w)) deleted_.insert(g_.edge_between(at, w));
}

void GadgetConfinement::post_move(NodeId arrived) {
  if (!active_ || done_) return;
  if (blocked_.count(arrived))
    fail(Errc::Internal, "agent reached a blocked node mid-strategy");
  recent_.insert(arrived);
  const std::size_t g = members_.size();
  if (recent_.size() + blocked_.size() < g - 1) return;
  // Exactly one member is neither blocked nor recently visited; block it.
  NodeId leftover = 0;
  bool found = false;
  for (NodeId m : members_)
    if (!blocked_.count(m) && !recent_.count(m)) {
      leftover = m;
      found = true;
      break;
    }
  if (!found) fail(Errc::Internal, "no leftover node to block");
  blocked_.insert(leftover);
  recent_ = {arrived};
  if (blocked_.size() >= g - 2) done_ = true;
}

std::int64_t GadgetConfinement::guaranteed_moves(std::size_t gadget_size) {
  const std::int64_t g = static_cast<std::int64_t>(gadget_size);
  std::int64_t total = 0;
  for (std::int64_t k = 2; k <= g - 3; ++k) total += g - 2 - k;
  return total;
}

}  // namespace tgx
