#ifndef TGX_INSTRUMENT_HPP
#define TGX_INSTRUMENT_HPP

#include "trace.hpp"

namespace tgx {

/// Replays a one-hop explorer trace, decomposing each time step into
/// (1) the move with the visit/map/port-label updates and (2) the port
/// deletions applied one edge elimination at a time in ascending edge order.
/// Produces the per-step potential series, the per-node charges taken on
/// first visits (last node -1, start node 0), and the per-edge charges taken
/// on eliminations. Throws when the replayed decisions diverge from the
/// recorded trace.
Instrumentation instrument_potential(const Trace& trace);

}  // namespace tgx

#endif
