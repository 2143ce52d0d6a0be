#include "agents/greedy_exp0.hpp"

#include <algorithm>

#include "engine.hpp"
#include "error.hpp"
#include "window.hpp"

namespace tgx {

std::vector<NodeId> GreedyExp0Agent::targets() const {
  std::vector<NodeId> out;
  for (NodeId v : map_.vmap())
    if (map_.smallest_open_port(v)) out.push_back(v);
  return out;
}

std::uint64_t GreedyExp0Agent::map_edge_estimate() const {
  std::uint64_t open = 0;
  for (NodeId v : map_.vmap())
    open += static_cast<std::uint64_t>(map_.open_port_count(v));
  return map_.tier1().size() + (open + 1) / 2;
}

AgentAction GreedyExp0Agent::step(const Observation& obs) {
  map_.note_visit(obs.node, obs.degree);
  if (last_node_ && last_port_) {
    // Traversing {u,v} teaches both directed labels: the port chosen at the
    // previous node and the incoming port here.
    map_.learn_port(*last_node_, obs.node, *last_port_);
    if (obs.incoming) map_.learn_port(obs.node, *last_node_, *obs.incoming);
  }
  auto delete_unavailable = [&] {
    for (Port p = 1; p <= obs.degree; ++p)
      if (!std::binary_search(obs.available.begin(), obs.available.end(), p))
        map_.delete_port(obs.node, p);
  };
  delete_unavailable();

  if (marks_.empty()) marks_.push_back(obs.t);

  auto target_nodes = targets();
  if (target_nodes.empty()) return AgentAction::terminate();

  if (timer_ >= round_budget(map_.vmap().size(), map_edge_estimate(), c_)) {
    // New round: forget deletions, except what this very observation shows.
    map_.reset_deleted_ports();
    delete_unavailable();
    timer_ = 0;
    marks_.push_back(obs.t);
    target_nodes = targets();
  }

  AgentAction action;
  const bool here_is_target =
      std::find(target_nodes.begin(), target_nodes.end(), obs.node) !=
      target_nodes.end();
  if (here_is_target) {
    action = AgentAction::move(*map_.smallest_open_port(obs.node));
  } else {
    const std::set<NodeId> target_set(target_nodes.begin(), target_nodes.end());
    const auto next = next_hop_to_closest(map_.tier1(), obs.node, target_set);
    if (!next)
      throw StuckError(
          "no node with an open port reachable in the map; the schedule "
          "violates the window assumption for this round");
    const auto port = map_.lambda(obs.node, *next);
    if (!port) fail(Errc::Internal, "missing port label along chosen map edge");
    action = AgentAction::move(*port);
  }
  ++timer_;
  last_node_ = obs.node;
  last_port_ = action.port;
  return action;
}

}  // namespace tgx
