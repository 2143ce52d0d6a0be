#ifndef TGX_AGENTS_GREEDY_EXP0_HPP
#define TGX_AGENTS_GREEDY_EXP0_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "agents/map_state.hpp"
#include "observation.hpp"

namespace tgx {

/// Greedy explorer for the zero-hop model. Port labels are learned only by
/// traversing edges, so the map never contains unvisited nodes; instead the
/// agent chases nodes that still have an open (never used) port that has not
/// been seen unavailable. Deleted-port sets are reset in rounds so that stale
/// deletions cannot disconnect the map for good; each round is budgeted by
/// the window function evaluated on the current map counts.
class GreedyExp0Agent : public Agent {
 public:
  explicit GreedyExp0Agent(std::uint32_t c) : c_(c) {}

  AgentAction step(const Observation& obs) override;
  std::vector<std::int64_t> round_marks() const override { return marks_; }
  const MapState& map() const { return map_; }

  /// Nodes of the map that still have an open non-deleted port.
  std::vector<NodeId> targets() const;

  /// Map edge count surrogate: known edges plus half the open ports.
  std::uint64_t map_edge_estimate() const;

 private:
  MapState map_;
  std::uint32_t c_;
  std::int64_t timer_ = 0;
  std::optional<NodeId> last_node_;
  std::optional<Port> last_port_;
  std::vector<std::int64_t> marks_;
};

}  // namespace tgx

#endif
