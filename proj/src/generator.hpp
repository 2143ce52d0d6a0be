#ifndef TGX_GENERATOR_HPP
#define TGX_GENERATOR_HPP

#include <cstdint>

#include "json_io.hpp"

namespace tgx {

struct GenConfig {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::int64_t window = 1;       // target window size T
  std::uint64_t seed = 0;
  double churn = 0.0;            // per-edge per-window absence probability
};

/// Random instance with a witness spanning tree present at every step:
/// a uniform random spanning tree plus random extra edges, the extras toggled
/// absent in randomly placed intervals. Interval-connected at every window
/// size up to the horizon by construction. Deterministic under the seed.
Instance gen_instance(const GenConfig& cfg, std::int64_t horizon);

/// Like gen_instance, but the witness tree rotates: each window-sized block
/// of time has its own spanning tree of the underlying graph, alive from just
/// before the block starts to its end, so every window is covered by one tree
/// while no single tree need survive the whole run. Edges outside the active
/// trees are absent, which makes the claimed window tight.
Instance gen_hard_instance(const GenConfig& cfg, std::int64_t horizon);

}  // namespace tgx

#endif
