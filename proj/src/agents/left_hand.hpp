#ifndef TGX_AGENTS_LEFT_HAND_HPP
#define TGX_AGENTS_LEFT_HAND_HPP

#include "observation.hpp"

namespace tgx {

/// Memoryless baseline: leave through the first available port cyclically
/// after the incoming one (smallest available at the start). Never
/// terminates on its own.
class LeftHandAgent : public Agent {
 public:
  AgentAction step(const Observation& obs) override;
};

}  // namespace tgx

#endif
