#include "agents/map_state.hpp"

#include <deque>

#include "error.hpp"

namespace tgx {

void MapState::note_visit(NodeId node, int degree) {
  vmap_.insert(node);
  const bool first = vvis_.insert(node).second;
  auto [it, inserted] = degree_.emplace(node, degree);
  if (!inserted && it->second != degree)
    fail(Errc::Internal, "observed degree changed at node " + std::to_string(node));
  if (first) {
    // Visiting reclassifies every known pair at this node.
    auto t = touching_.find(node);
    if (t != touching_.end())
      for (NodeId w : std::set<NodeId>(t->second)) refresh_pair(node, w);
  }
}

void MapState::note_observed(NodeId node) { vmap_.insert(node); }

void MapState::learn_port(NodeId at, NodeId to, Port p) {
  auto& fwd = lambda_[at];
  auto f = fwd.find(to);
  if (f != fwd.end()) {
    if (f->second != p)
      fail(Errc::Internal, "contradictory port label at node " + std::to_string(at));
    return;
  }
  auto& inv = partner_[at];
  auto g = inv.find(p);
  if (g != inv.end() && g->second != to)
    fail(Errc::Internal,
         "port " + std::to_string(p) + " at node " + std::to_string(at) +
             " already maps to another neighbor");
  fwd[to] = p;
  inv[p] = to;
  touching_[at].insert(to);
  touching_[to].insert(at);
  refresh_pair(at, to);
}

void MapState::delete_port(NodeId at, Port p) {
  if (!deleted_[at].insert(p).second) return;
  auto it = partner_.find(at);
  if (it != partner_.end()) {
    auto g = it->second.find(p);
    if (g != it->second.end()) refresh_pair(at, g->second);
  }
}

void MapState::reset_deleted_ports() {
  // Re-evaluate every pair whose status may have depended on a deletion.
  std::map<NodeId, std::set<Port>> old = std::move(deleted_);
  deleted_.clear();
  for (const auto& [at, ports] : old) {
    auto it = partner_.find(at);
    if (it == partner_.end()) continue;
    for (Port p : ports) {
      auto g = it->second.find(p);
      if (g != it->second.end()) refresh_pair(at, g->second);
    }
  }
}

std::optional<Port> MapState::lambda(NodeId u, NodeId v) const {
  auto it = lambda_.find(u);
  if (it == lambda_.end()) return std::nullopt;
  auto f = it->second.find(v);
  if (f == it->second.end()) return std::nullopt;
  return f->second;
}

std::optional<NodeId> MapState::port_partner(NodeId u, Port p) const {
  auto it = partner_.find(u);
  if (it == partner_.end()) return std::nullopt;
  auto f = it->second.find(p);
  if (f == it->second.end()) return std::nullopt;
  return f->second;
}

bool MapState::port_deleted(NodeId v, Port p) const {
  auto it = deleted_.find(v);
  return it != deleted_.end() && it->second.count(p) != 0;
}

std::optional<int> MapState::degree_of(NodeId v) const {
  auto it = degree_.find(v);
  if (it == degree_.end()) return std::nullopt;
  return it->second;
}

int MapState::used_port_count(NodeId v) const {
  auto it = partner_.find(v);
  return it == partner_.end() ? 0 : static_cast<int>(it->second.size());
}

std::optional<Port> MapState::smallest_open_port(NodeId v) const {
  auto deg = degree_of(v);
  if (!deg) fail(Errc::Internal, "open ports queried for unvisited node");
  for (Port p = 1; p <= *deg; ++p)
    if (!port_partner(v, p) && !port_deleted(v, p)) return p;
  return std::nullopt;
}

int MapState::open_port_count(NodeId v) const {
  auto deg = degree_of(v);
  if (!deg) fail(Errc::Internal, "open ports queried for unvisited node");
  return *deg - used_port_count(v);
}

void MapState::refresh_pair(NodeId u, NodeId v) {
  const EdgeKey key(u, v);
  e1_.erase(key);
  e2_.erase(key);

  const auto puv = lambda(u, v);
  const auto pvu = lambda(v, u);
  const bool u_ok = puv && !port_deleted(u, *puv);
  const bool v_ok = pvu && !port_deleted(v, *pvu);

  if (visited(u) && visited(v)) {
    if (u_ok && v_ok) e1_.insert(key);
    return;
  }
  if (visited(u) && mapped(v) && !visited(v)) {
    if (u_ok) e2_.insert(key);
    return;
  }
  if (visited(v) && mapped(u) && !visited(u)) {
    if (v_ok) e2_.insert(key);
    return;
  }
}

std::optional<NodeId> next_hop_to_closest(const std::set<EdgeKey>& edges,
                                          NodeId from,
                                          const std::set<NodeId>& targets) {
  if (targets.empty()) return std::nullopt;
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const EdgeKey& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  // std::map iteration inserts neighbors in edge order; sort for the
  // ascending-id expansion that defines the lexicographic tie-break.
  for (auto& [v, lst] : adj) std::sort(lst.begin(), lst.end());

  auto bfs = [&adj](NodeId src) {
    std::map<NodeId, std::int64_t> dist;
    dist[src] = 0;
    std::deque<NodeId> queue{src};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (NodeId u : it->second)
        if (!dist.count(u)) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    return dist;
  };

  const auto dist = bfs(from);
  std::optional<NodeId> goal;
  std::int64_t best = -1;
  for (NodeId w : targets) {  // ascending ids; strict < keeps the lowest
    auto it = dist.find(w);
    if (it == dist.end()) continue;
    if (!goal || it->second < best) {
      goal = w;
      best = it->second;
    }
  }
  if (!goal) return std::nullopt;
  if (*goal == from) return from;

  const auto dist_to_goal = bfs(*goal);
  const std::int64_t d = dist_to_goal.at(from);
  auto it = adj.find(from);
  for (NodeId x : it->second) {  // ascending: lexicographically-least path
    auto dx = dist_to_goal.find(x);
    if (dx != dist_to_goal.end() && dx->second == d - 1) return x;
  }
  fail(Errc::Internal, "no shortest-path successor found");
}

}  // namespace tgx
