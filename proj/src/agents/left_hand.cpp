#include "agents/left_hand.hpp"

#include <algorithm>

namespace tgx {

AgentAction LeftHandAgent::step(const Observation& obs) {
  if (obs.available.empty()) return AgentAction::terminate();
  if (!obs.incoming) return AgentAction::move(obs.available.front());
  for (int k = 1; k <= obs.degree; ++k) {
    const Port p = static_cast<Port>((*obs.incoming - 1 + k) % obs.degree) + 1;
    if (std::binary_search(obs.available.begin(), obs.available.end(), p))
      return AgentAction::move(p);
  }
  return AgentAction::terminate();
}

}  // namespace tgx
