#include "agents/greedy_exp1.hpp"

#include <algorithm>
#include <deque>

#include "engine.hpp"
#include "error.hpp"

namespace tgx {
namespace ge1 {

void absorb_sight(MapState& map, const Observation& obs,
                  std::optional<NodeId> prev) {
  if (!obs.view) fail(Errc::Model, "one-hop view required");
  map.note_visit(obs.node, obs.degree);
  if (obs.incoming && prev) map.learn_port(obs.node, *prev, *obs.incoming);
  for (const auto& [nbr, port] : *obs.view) {
    map.note_observed(nbr);
    map.learn_port(obs.node, nbr, port);
  }
}

std::vector<Port> unavailable_ports(const Observation& obs) {
  std::vector<Port> out;
  for (Port p = 1; p <= obs.degree; ++p)
    if (!std::binary_search(obs.available.begin(), obs.available.end(), p))
      out.push_back(p);
  return out;
}

std::optional<std::int64_t> target_distance(const MapState& map, NodeId from) {
  if (map.fully_visited()) return 0;
  std::set<EdgeKey> edges = map.tier1();
  edges.insert(map.tier2().begin(), map.tier2().end());
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const EdgeKey& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<NodeId, std::int64_t> dist;
  dist[from] = 0;
  std::deque<NodeId> queue{from};
  std::optional<std::int64_t> best;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    if (!map.visited(v)) {
      if (!best || dist[v] < *best) best = dist[v];
      continue;  // targets need not be expanded further
    }
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (NodeId u : it->second)
      if (!dist.count(u)) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return best;
}

AgentAction decide(const MapState& map, NodeId at) {
  if (map.fully_visited()) return AgentAction::terminate();
  std::set<EdgeKey> edges = map.tier1();
  edges.insert(map.tier2().begin(), map.tier2().end());
  std::set<NodeId> targets;
  for (NodeId v : map.vmap())
    if (!map.visited(v)) targets.insert(v);
  const auto next = next_hop_to_closest(edges, at, targets);
  if (!next)
    throw StuckError(
        "no observed-unvisited node reachable in the map; the schedule "
        "violates the window assumption");
  const auto port = map.lambda(at, *next);
  if (!port) fail(Errc::Internal, "missing port label along chosen map edge");
  return AgentAction::move(*port);
}

}  // namespace ge1

AgentAction GreedyExp1Agent::step(const Observation& obs) {
  ge1::absorb_sight(map_, obs, last_node_);
  for (Port p : ge1::unavailable_ports(obs)) map_.delete_port(obs.node, p);
  const AgentAction action = ge1::decide(map_, obs.node);
  last_node_ = obs.node;
  return action;
}

}  // namespace tgx
