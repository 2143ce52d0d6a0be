#ifndef TGX_OBSERVATION_HPP
#define TGX_OBSERVATION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tgx {

/// What the agent sees at one time step. `view` is populated only under the
/// one-hop visibility model and then lists (neighbor id, port here) for
/// exactly the currently present incident edges, sorted by port; its port set
/// equals `available`.
struct Observation {
  std::int64_t t = 0;
  NodeId node = 0;
  int degree = 0;
  std::vector<Port> available;                               // sorted
  std::optional<Port> incoming;                              // absent at t = 0
  std::optional<std::vector<std::pair<NodeId, Port>>> view;  // one-hop only
};

struct AgentAction {
  enum class Kind { Move, Terminate };
  Kind kind = Kind::Terminate;
  Port port = 0;

  static AgentAction move(Port p) { return {Kind::Move, p}; }
  static AgentAction terminate() { return {Kind::Terminate, 0}; }
};

/// Deterministic observation -> action state machine, one instance per run.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentAction step(const Observation& obs) = 0;
  /// Times at which the agent started a new internal round, if it has any.
  virtual std::vector<std::int64_t> round_marks() const { return {}; }
};

}  // namespace tgx

#endif
