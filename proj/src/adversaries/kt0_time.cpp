#include "adversaries/kt0_time.hpp"

#include <algorithm>

#include "error.hpp"

namespace tgx {

Kt0TimeAdversary::Kt0TimeAdversary(NodeId n, std::size_t m) {
  if (n < 12) fail(Errc::InvalidArgument, "construction needs n >= 12");
  if (m < n) fail(Errc::InvalidArgument, "construction needs m >= n");
  const NodeId ell = n / 3;
  const NodeId r = 2 * n / 3;
  left_size_ = ell;
  right_from_ = r - 1;  // ids are zero-based

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<Kind> kinds;
  for (NodeId i = 0; i + 1 < n; ++i) {
    pairs.emplace_back(i, i + 1);
    kinds.push_back(Kind::Path);
  }
  const std::size_t delta = m - n + 1;
  const std::size_t capacity =
      static_cast<std::size_t>(ell) * static_cast<std::size_t>(n - 1 - right_from_);
  trap_count_ = std::min(delta, capacity);
  std::size_t placed = 0;
  for (NodeId vr = right_from_; vr + 1 < n && placed < trap_count_; ++vr)
    for (NodeId vl = 0; vl < ell && placed < trap_count_; ++vl) {
      pairs.emplace_back(vr, vl);
      kinds.push_back(Kind::Trap);
      ++placed;
    }
  std::set<EdgeKey> taken;
  for (const auto& [a, b] : pairs) taken.insert(EdgeKey(a, b));
  std::size_t need = delta - trap_count_;
  for (NodeId a = 0; a < n && need > 0; ++a)
    for (NodeId b = a + 1; b < n && need > 0; ++b) {
      if (taken.count(EdgeKey(a, b))) continue;
      taken.insert(EdgeKey(a, b));
      pairs.emplace_back(a, b);
      kinds.push_back(Kind::Null);
      --need;
    }
  if (need > 0) fail(Errc::InvalidArgument, "m too large for null padding");

  g_ = PortGraph::from_pairs(n, pairs);
  kind_ = std::move(kinds);
  guaranteed_ = static_cast<std::int64_t>(trap_count_) *
                static_cast<std::int64_t>(r - ell);
  bound_.assign(n, {});
  bound_rev_.assign(n, {});
  ever_reported_.assign(n, {});
  visited_.assign(n, 0);
}

bool Kt0TimeAdversary::suppressed_at(NodeId v, EdgeId e) const {
  switch (kind_[e]) {
    case Kind::Null:
      return true;
    case Kind::Trap:
      return left_side(v);
    case Kind::Path:
      return false;
  }
  return false;
}

bool Kt0TimeAdversary::present(EdgeId e) const {
  const Edge& ed = g_.edge(e);
  if (ed.u == current_ || ed.v == current_)
    return !suppressed_at(current_, e);
  return true;  // dumps stay maximal away from the agent
}

std::vector<EdgeId> Kt0TimeAdversary::unbound_edges(NodeId v) const {
  std::vector<EdgeId> out;
  for (const auto& inc : g_.incident(v))
    if (!bound_rev_[v].count(inc.edge)) out.push_back(inc.edge);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Port> Kt0TimeAdversary::unbound_ports(NodeId v) const {
  std::vector<Port> out;
  for (Port p = 1; p <= static_cast<Port>(g_.degree(v)); ++p)
    if (!bound_[v].count(p)) out.push_back(p);
  return out;
}

void Kt0TimeAdversary::begin_step(std::int64_t t, NodeId at) {
  if (t != next_t_) fail(Errc::Internal, "steps must be committed in order");
  if (finalized_) fail(Errc::Internal, "adversary already realized");
  ++next_t_;
  current_ = at;
  visited_[at] = 1;

  // Report: bound ports with a present edge, plus the k smallest unbound
  // ports where k counts present unbound edges.
  current_report_.clear();
  for (const auto& [p, e] : bound_[at])
    if (!suppressed_at(at, e)) current_report_.push_back(p);
  std::size_t k = 0;
  for (EdgeId e : unbound_edges(at))
    if (!suppressed_at(at, e)) ++k;
  for (Port p : unbound_ports(at)) {
    if (k == 0) break;
    current_report_.push_back(p);
    ever_reported_[at].insert(p);
    --k;
  }
  std::sort(current_report_.begin(), current_report_.end());
  records_.push_back({at, current_report_});
}

std::vector<Port> Kt0TimeAdversary::available_ports(NodeId at) const {
  if (at != current_)
    fail(Errc::Internal, "availability queried away from the agent");
  return current_report_;
}

void Kt0TimeAdversary::bind(NodeId v, Port p, EdgeId e) {
  if (bound_[v].count(p) || bound_rev_[v].count(e))
    fail(Errc::Internal, "double port binding");
  bound_[v][p] = e;
  bound_rev_[v][e] = p;
  ever_reported_[v].erase(p);
}

NodeId Kt0TimeAdversary::resolve_move(NodeId at, Port p) {
  auto it = bound_[at].find(p);
  EdgeId chosen;
  if (it != bound_[at].end()) {
    chosen = it->second;
    if (suppressed_at(at, chosen))
      fail(Errc::Internal, "move through an absent edge");
  } else {
    // Lazy binding: route the unused port through an unused present edge,
    // trap edges first.
    std::optional<EdgeId> pick;
    for (EdgeId e : unbound_edges(at)) {
      if (suppressed_at(at, e)) continue;
      if (kind_[e] == Kind::Trap) {
        pick = e;
        break;
      }
      if (!pick) pick = e;
    }
    if (!pick) fail(Errc::Internal, "no present unused edge to bind");
    chosen = *pick;
    bind(at, p, chosen);
  }
  const Edge& ed = g_.edge(chosen);
  return ed.u == at ? ed.v : ed.u;
}

Port Kt0TimeAdversary::arrival_port(NodeId at, NodeId from) {
  const EdgeId e = g_.edge_between(at, from);
  auto it = bound_rev_[at].find(e);
  if (it != bound_rev_[at].end()) return it->second;
  const auto ports = unbound_ports(at);
  if (ports.empty()) fail(Errc::Internal, "no unbound port left for arrival");
  // Past reports promised the ports reported available map to edges present
  // at this node's visits. An edge of the always-present-here category must
  // therefore bind a port already reported; an edge suppressed here must
  // bind one never reported. Fresh nodes have no promises yet.
  Port chosen = 0;
  if (!visited_[at]) {
    chosen = ports.front();
  } else if (!suppressed_at(at, e)) {
    for (Port p : ports)
      if (ever_reported_[at].count(p)) {
        chosen = p;
        break;
      }
  } else {
    for (Port p : ports)
      if (!ever_reported_[at].count(p)) {
        chosen = p;
        break;
      }
  }
  if (chosen == 0)
    fail(Errc::Internal, "no history-consistent port for the arrival edge");
  bind(at, chosen, e);
  return chosen;
}

const std::map<Port, EdgeId>& Kt0TimeAdversary::bindings(NodeId v) const {
  return bound_[v];
}

void Kt0TimeAdversary::complete_bindings() {
  for (NodeId v = 0; v < g_.node_count(); ++v) {
    const auto ports = unbound_ports(v);
    const auto edges = unbound_edges(v);
    if (ports.size() != edges.size())
      fail(Errc::Internal, "port/edge count mismatch at completion");
    if (!visited_[v]) {
      for (std::size_t i = 0; i < ports.size(); ++i) bind(v, ports[i], edges[i]);
      continue;
    }
    // Reported-but-never-used ports must land on edges that were present at
    // this node's visits; the rest take the suppressed edges.
    std::vector<Port> rep, unrep;
    for (Port p : ports)
      (ever_reported_[v].count(p) ? rep : unrep).push_back(p);
    std::vector<EdgeId> open, shut;
    for (EdgeId e : edges)
      (suppressed_at(v, e) ? shut : open).push_back(e);
    if (rep.size() != open.size())
      fail(Errc::Internal, "inconsistent lazy-binding history");
    for (std::size_t i = 0; i < rep.size(); ++i) bind(v, rep[i], open[i]);
    for (std::size_t i = 0; i < unrep.size(); ++i) bind(v, unrep[i], shut[i]);
  }
}

PortGraph Kt0TimeAdversary::realized_graph() const {
  if (!finalized_)
    fail(Errc::Internal, "realized graph available only after realize()");
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    const Edge& ed = g_.edge(e);
    edges.push_back(
        Edge{ed.u, ed.v, bound_rev_[ed.u].at(e), bound_rev_[ed.v].at(e)});
  }
  return PortGraph::from_edges(g_.node_count(), std::move(edges));
}

FixedSchedule Kt0TimeAdversary::realize() {
  if (!finalized_) {
    complete_bindings();
    finalized_ = true;
  }
  std::vector<std::vector<EdgeId>> per_step(records_.size());
  for (std::size_t t = 0; t < records_.size(); ++t) {
    const StepRecord& rec = records_[t];
    for (const auto& inc : g_.incident(rec.at)) {
      const Port p = bound_rev_[rec.at].at(inc.edge);
      if (!std::binary_search(rec.reported.begin(), rec.reported.end(), p))
        per_step[t].push_back(inc.edge);
    }
  }
  return schedule_from_step_absences(g_.edge_count(), per_step,
                                     static_cast<std::int64_t>(records_.size()));
}

}  // namespace tgx
