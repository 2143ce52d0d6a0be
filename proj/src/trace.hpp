#ifndef TGX_TRACE_HPP
#define TGX_TRACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "observation.hpp"

namespace tgx {

enum class RunOutcome {
  Terminated,         // the agent chose to stop
  StepLimit,          // max_steps reached
  Stuck,              // the agent had no defined move (window assumption broken)
  ProtocolViolation,  // the agent selected an unavailable port
};

struct TraceStep {
  std::int64_t t = 0;
  NodeId node = 0;
  std::optional<Port> move_port;  // empty on the final non-move step
  bool new_visit = false;
  Observation obs;  // full observation, kept for replay and accounting
};

/// Potential accounting attached to a one-hop explorer run.
struct Instrumentation {
  std::vector<std::int64_t> d_series;
  std::map<NodeId, std::int64_t> iota_v;
  std::map<EdgeKey, std::int64_t> iota_e;

  std::int64_t sum_iota_v() const;
  std::int64_t sum_iota_e() const;
};

/// Full step-by-step record of one run. Immutable once produced.
struct Trace {
  std::vector<TraceStep> steps;
  std::vector<NodeId> visited_order;  // first-visit sequence, no duplicates
  RunOutcome outcome = RunOutcome::StepLimit;
  std::string diagnostic;
  std::int64_t moves = 0;  // number of edge traversals
  std::vector<std::int64_t> round_marks;
  std::optional<Instrumentation> instr;

  bool terminated() const { return outcome == RunOutcome::Terminated; }
  /// First time the given node was visited, or -1.
  std::int64_t first_visit(NodeId v) const;
};

/// One line per step plus a summary line, as newline-delimited JSON.
std::string trace_to_jsonl(const Trace& trace);

/// Moves along a previously unused edge into an already-visited node.
std::int64_t redundant_move_count(const Trace& trace);

}  // namespace tgx

#endif
