#include "instrument.hpp"

#include <algorithm>

#include "agents/greedy_exp1.hpp"
#include "engine.hpp"
#include "error.hpp"

namespace tgx {

namespace {

std::int64_t potential(const MapState& map, NodeId at) {
  const auto d = ge1::target_distance(map, at);
  if (!d)
    fail(Errc::Internal,
         "potential undefined: targets exist but none is reachable");
  return *d;
}

}  // namespace

Instrumentation instrument_potential(const Trace& trace) {
  Instrumentation out;
  if (trace.steps.empty()) return out;
  if (!trace.steps.front().obs.view)
    fail(Errc::Model, "instrumentation requires a one-hop trace");

  MapState map;
  std::optional<NodeId> prev;
  std::int64_t d_prev = 0;

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    const Observation& obs = step.obs;
    if (obs.node != step.node)
      fail(Errc::Internal, "trace step and observation disagree");

    // First step: the move lands, the visit registers, the view and the
    // incoming port extend the map.
    const bool first_visit = !map.visited(obs.node);
    ge1::absorb_sight(map, obs, prev);
    const std::int64_t d_after_move = potential(map, obs.node);
    if (i == 0) {
      out.iota_v[obs.node] = 0;
    } else if (first_visit) {
      out.iota_v[obs.node] = d_after_move - d_prev;
    }

    // Second step: deletions. Collect the ports whose loss eliminates a map
    // edge and apply those eliminations in ascending edge order; deletions
    // that touch no map edge cannot change the potential.
    std::int64_t d_cur = d_after_move;
    std::vector<std::pair<EdgeKey, Port>> eliminations;
    std::vector<Port> plain;
    for (Port p : ge1::unavailable_ports(obs)) {
      if (map.port_deleted(obs.node, p)) continue;
      const auto partner = map.port_partner(obs.node, p);
      if (partner) {
        const EdgeKey key(obs.node, *partner);
        if (map.tier1().count(key) || map.tier2().count(key)) {
          eliminations.emplace_back(key, p);
          continue;
        }
      }
      plain.push_back(p);
    }
    std::sort(eliminations.begin(), eliminations.end());
    for (const auto& [key, port] : eliminations) {
      map.delete_port(obs.node, port);
      const std::int64_t d_next = potential(map, obs.node);
      out.iota_e[key] += d_next - d_cur;
      d_cur = d_next;
    }
    for (Port p : plain) map.delete_port(obs.node, p);

    out.d_series.push_back(d_cur);
    d_prev = d_cur;

    // Replay the decision and require agreement with the record.
    if (step.move_port) {
      AgentAction expected;
      try {
        expected = ge1::decide(map, obs.node);
      } catch (const StuckError&) {
        fail(Errc::Internal,
             "replay diverged: recorded move where the rule has none");
      }
      if (expected.kind != AgentAction::Kind::Move ||
          expected.port != *step.move_port)
        fail(Errc::Internal, "replay diverged from the recorded trace at t=" +
                                 std::to_string(step.t));
      prev = obs.node;
    } else if (trace.outcome == RunOutcome::Terminated) {
      if (!map.fully_visited())
        fail(Errc::Internal,
             "replay diverged: recorded termination with unvisited map nodes");
    }
  }
  return out;
}

}  // namespace tgx
