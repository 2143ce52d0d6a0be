#ifndef TGX_CONNECTIVITY_HPP
#define TGX_CONNECTIVITY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "schedule.hpp"

namespace tgx {

inline constexpr std::int64_t kUnreachable = -1;

/// Plain adjacency lists with neighbors sorted ascending; the shared
/// substrate for breadth-first searches over arbitrary node/edge sets.
struct AdjacencyList {
  std::vector<std::vector<NodeId>> nbrs;

  static AdjacencyList from_pairs(
      NodeId n, const std::vector<std::pair<NodeId, NodeId>>& pairs);
};

/// Exact hop distances from src; unreachable nodes get kUnreachable.
/// Neighbor expansion in ascending id order.
std::vector<std::int64_t> bfs_distances(const AdjacencyList& g, NodeId src);

bool is_connected(const AdjacencyList& g);

/// Edges present at every step of the inclusive window [a..b].
std::vector<EdgeId> intersection_edges(const PortGraph& g,
                                       const FixedSchedule& s, std::int64_t a,
                                       std::int64_t b);

struct WindowVerdict {
  bool ok;
  std::int64_t first_violation;  // window start, meaningful when !ok
};

/// Whether every length-T window over the schedule's horizon has a connected
/// intersection graph on all nodes. Union-find per window, recomputed from
/// scratch; correctness first, speed second at desk scale.
WindowVerdict verify_interval_connectivity(const PortGraph& g,
                                           const FixedSchedule& s,
                                           std::int64_t T);

}  // namespace tgx

#endif
