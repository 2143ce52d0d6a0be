#ifndef TGX_AGENTS_GREEDY_EXP1_HPP
#define TGX_AGENTS_GREEDY_EXP1_HPP

#include <optional>

#include "agents/map_state.hpp"
#include "observation.hpp"

namespace tgx {
namespace ge1 {

/// Everything a one-hop observation teaches short of port deletions: the
/// visit itself, observed neighbors with their ports, and the incoming port
/// (recorded even when the arrival edge is already gone).
void absorb_sight(MapState& map, const Observation& obs,
                  std::optional<NodeId> prev);

/// Ports unavailable in the observation, ascending.
std::vector<Port> unavailable_ports(const Observation& obs);

/// Distance from `from` to the nearest observed-unvisited node in the map
/// graph (both edge tiers); 0 when everything observed is visited; empty when
/// targets exist but none is reachable.
std::optional<std::int64_t> target_distance(const MapState& map, NodeId from);

/// The movement rule: terminate once the map is fully visited, otherwise move
/// along the lexicographically-least shortest path to the closest
/// observed-unvisited node (ties by lowest id). Throws StuckError when no
/// target is reachable, which signals a schedule violating the window
/// assumption.
AgentAction decide(const MapState& map, NodeId at);

}  // namespace ge1

/// Greedy map-based explorer for the one-hop visibility model: absorbs each
/// observation into the map, drops edges whose ports were ever unavailable,
/// and walks toward the closest known-unvisited node.
class GreedyExp1Agent : public Agent {
 public:
  AgentAction step(const Observation& obs) override;
  const MapState& map() const { return map_; }

 private:
  MapState map_;
  std::optional<NodeId> last_node_;
};

}  // namespace tgx

#endif
