#include "generator.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "rng.hpp"

namespace tgx {

namespace {

void validate(const GenConfig& cfg) {
  if (cfg.n < 3) fail(Errc::InvalidArgument, "generator needs n >= 3");
  const std::uint64_t full =
      static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1) / 2;
  if (cfg.m < cfg.n || cfg.m > full)
    fail(Errc::InvalidArgument, "generator needs n <= m <= n(n-1)/2");
  if (cfg.window < 1) fail(Errc::InvalidArgument, "window must be >= 1");
  if (cfg.churn < 0.0 || cfg.churn > 1.0)
    fail(Errc::InvalidArgument, "churn must lie in [0,1]");
}

/// Uniform spanning tree of the complete graph via a random walk: the first
/// entering edge of every node joins the tree.
std::vector<std::pair<NodeId, NodeId>> random_tree(NodeId n, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> tree;
  std::vector<char> seen(n, 0);
  NodeId cur = static_cast<NodeId>(rng.below(n));
  seen[cur] = 1;
  NodeId covered = 1;
  while (covered < n) {
    NodeId next = static_cast<NodeId>(rng.below(n));
    if (next == cur) continue;
    if (!seen[next]) {
      seen[next] = 1;
      ++covered;
      tree.emplace_back(cur, next);
    }
    cur = next;
  }
  return tree;
}

/// Random walk over a fixed edge set; yields a spanning tree of that graph.
std::vector<EdgeId> random_subtree(const PortGraph& g, Rng& rng) {
  std::vector<EdgeId> tree;
  std::vector<char> seen(g.node_count(), 0);
  NodeId cur = static_cast<NodeId>(rng.below(g.node_count()));
  seen[cur] = 1;
  NodeId covered = 1;
  while (covered < g.node_count()) {
    const auto& inc = g.incident(cur);
    const auto& pick = inc[rng.below(inc.size())];
    if (!seen[pick.neighbor]) {
      seen[pick.neighbor] = 1;
      ++covered;
      tree.push_back(pick.edge);
    }
    cur = pick.neighbor;
  }
  return tree;
}

/// Tree edges first, then random distinct extras.
std::vector<std::pair<NodeId, NodeId>> random_graph_pairs(const GenConfig& cfg,
                                                          Rng& rng) {
  auto pairs = random_tree(cfg.n, rng);
  std::set<EdgeKey> taken;
  for (const auto& [u, v] : pairs) taken.insert(EdgeKey(u, v));
  while (pairs.size() < cfg.m) {
    const NodeId u = static_cast<NodeId>(rng.below(cfg.n));
    const NodeId v = static_cast<NodeId>(rng.below(cfg.n));
    if (u == v) continue;
    if (!taken.insert(EdgeKey(u, v)).second) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  return pairs;
}

}  // namespace

Instance gen_instance(const GenConfig& cfg, std::int64_t horizon) {
  validate(cfg);
  if (horizon < 1) fail(Errc::InvalidArgument, "horizon must be >= 1");
  Rng rng(cfg.seed);
  auto pairs = random_graph_pairs(cfg, rng);
  PortGraph g = PortGraph::from_pairs(cfg.n, pairs);

  FixedSchedule s(g.edge_count(), horizon, cfg.window);
  const std::int64_t T = cfg.window;
  // The first n-1 edges form the witness tree and stay untouched. Extras
  // churn in window-sized blocks, never within T steps of the horizon end.
  for (EdgeId e = cfg.n - 1; e < g.edge_count(); ++e) {
    for (std::int64_t block = 0; block + 2 * T <= horizon; block += T) {
      if (rng.real01() >= cfg.churn) continue;
      const std::int64_t len = rng.range(1, T);
      const std::int64_t start = block + rng.range(0, T - len);
      s.add_absence(e, start, start + len - 1);
    }
  }
  return Instance{std::move(g), std::move(s), std::nullopt, std::nullopt};
}

Instance gen_hard_instance(const GenConfig& cfg, std::int64_t horizon) {
  validate(cfg);
  if (horizon < 1) fail(Errc::InvalidArgument, "horizon must be >= 1");
  Rng rng(cfg.seed);
  auto pairs = random_graph_pairs(cfg, rng);
  PortGraph g = PortGraph::from_pairs(cfg.n, pairs);

  const std::int64_t T = std::min<std::int64_t>(cfg.window, horizon);
  const std::size_t blocks =
      static_cast<std::size_t>((horizon + T - 1) / T);

  // Liveness per edge: the union of [max(0, kT-T+1) .. min((k+1)T, horizon)-1]
  // over blocks k whose tree contains the edge. A window starting at t in
  // [(k-1)T+1 .. kT] lies inside block k's span, so every window has a tree.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> live(
      g.edge_count());
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::int64_t from =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(k) * T - (T - 1));
    const std::int64_t to =
        std::min<std::int64_t>(horizon, (static_cast<std::int64_t>(k) + 1) * T) - 1;
    for (EdgeId e : random_subtree(g, rng)) live[e].emplace_back(from, to);
  }

  FixedSchedule s(g.edge_count(), horizon, T);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    // Complement of the liveness union becomes absence intervals.
    auto& spans = live[e];
    std::sort(spans.begin(), spans.end());
    std::int64_t cursor = 0;
    for (const auto& [from, to] : spans) {
      if (from > cursor) s.add_absence(e, cursor, from - 1);
      cursor = std::max(cursor, to + 1);
    }
    if (cursor < horizon) s.add_absence(e, cursor, horizon - 1);
  }
  return Instance{std::move(g), std::move(s), std::nullopt, std::nullopt};
}

}  // namespace tgx
