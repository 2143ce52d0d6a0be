#include "trace.hpp"

#include <set>
#include <sstream>

namespace tgx {

std::int64_t Instrumentation::sum_iota_v() const {
  std::int64_t s = 0;
  for (const auto& [v, x] : iota_v) s += x;
  return s;
}

std::int64_t Instrumentation::sum_iota_e() const {
  std::int64_t s = 0;
  for (const auto& [e, x] : iota_e) s += x;
  return s;
}

std::int64_t Trace::first_visit(NodeId v) const {
  std::set<NodeId> seen;
  for (const TraceStep& s : steps) {
    if (s.node == v) return s.t;
    seen.insert(s.node);
  }
  return -1;
}

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream out;
  for (const TraceStep& s : trace.steps) {
    out << "{\"t\":" << s.t << ",\"node\":" << s.node << ",\"port\":";
    if (s.move_port)
      out << *s.move_port;
    else
      out << "null";
    out << ",\"avail\":[";
    for (std::size_t i = 0; i < s.obs.available.size(); ++i) {
      if (i) out << ',';
      out << s.obs.available[i];
    }
    out << "],\"new_visit\":" << (s.new_visit ? "true" : "false") << "}\n";
  }
  const std::int64_t iv = trace.instr ? trace.instr->sum_iota_v() : 0;
  const std::int64_t ie = trace.instr ? trace.instr->sum_iota_e() : 0;
  out << "{\"terminated\":" << (trace.terminated() ? "true" : "false")
      << ",\"steps\":" << trace.moves
      << ",\"visited\":" << trace.visited_order.size()
      << ",\"sum_iota_v\":" << iv << ",\"sum_iota_e\":" << ie << "}\n";
  return out.str();
}

std::int64_t redundant_move_count(const Trace& trace) {
  std::set<EdgeKey> used;
  std::set<NodeId> visited;
  std::int64_t count = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    visited.insert(s.node);
    if (!s.move_port || i + 1 >= trace.steps.size()) continue;
    const NodeId to = trace.steps[i + 1].node;
    const EdgeKey key(s.node, to);
    if (!used.count(key) && visited.count(to)) ++count;
    used.insert(key);
  }
  return count;
}

}  // namespace tgx
