#ifndef TGX_ENGINE_HPP
#define TGX_ENGINE_HPP

#include <cstdint>

#include "error.hpp"
#include "graph.hpp"
#include "observation.hpp"
#include "schedule.hpp"
#include "trace.hpp"

namespace tgx {

struct RunConfig {
  NodeId start = 0;
  Model model = Model::Kt1;
  std::int64_t max_steps = 0;
};

/// Builds the observation at time t for an agent at `current` under a fixed
/// schedule. `previous` yields the incoming port, reported even when the
/// arrival edge is no longer present.
Observation build_observation(const PortGraph& g, const FixedSchedule& s,
                              std::int64_t t, NodeId current,
                              std::optional<NodeId> previous, Model model);

/// Runs one agent over a fixed schedule. Each step: presence is fixed, the
/// observation is built, the agent answers; Move crosses the chosen port,
/// Terminate ends the run, and max_steps bounds the number of moves. An
/// unavailable port aborts the run as a protocol violation, never silently
/// corrected.
Trace run(const PortGraph& g, const FixedSchedule& s, Agent& agent,
          const RunConfig& cfg);

/// Runs one agent against an adaptive adversary, which commits each step's
/// presence after seeing the agent's position.
Trace run(Adversary& adv, Agent& agent, const RunConfig& cfg);

/// Thrown by agents when their movement rule has no defined move left;
/// the engine converts it into RunOutcome::Stuck.
class StuckError : public Error {
 public:
  explicit StuckError(std::string message)
      : Error(Errc::Internal, std::move(message)) {}
};

}  // namespace tgx

#endif
