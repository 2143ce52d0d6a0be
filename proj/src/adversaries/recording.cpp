#include "adversaries/recording.hpp"

#include <algorithm>

#include "error.hpp"

namespace tgx {

FixedSchedule schedule_from_step_absences(
    std::size_t edge_count, const std::vector<std::vector<EdgeId>>& per_step,
    std::optional<std::int64_t> claimed_window) {
  const std::int64_t horizon = static_cast<std::int64_t>(per_step.size());
  // Gather per-edge absent times, then fold runs into intervals.
  std::vector<std::vector<std::int64_t>> times(edge_count);
  for (std::int64_t t = 0; t < horizon; ++t)
    for (EdgeId e : per_step[t]) {
      if (e >= edge_count) fail(Errc::Range, "absent edge id out of range");
      times[e].push_back(t);
    }
  FixedSchedule s(edge_count, horizon, claimed_window);
  for (EdgeId e = 0; e < edge_count; ++e) {
    const auto& ts = times[e];
    std::size_t i = 0;
    while (i < ts.size()) {
      std::size_t j = i;
      while (j + 1 < ts.size() && ts[j + 1] == ts[j] + 1) ++j;
      s.add_absence(e, ts[i], ts[j]);
      i = j + 1;
    }
  }
  return s;
}

RecordingAdversary::RecordingAdversary(PortGraph g,
                                       std::vector<EdgeId> null_edges)
    : g_(std::move(g)), null_edges_(std::move(null_edges)) {
  nulls_at_.assign(g_.node_count(), {});
  for (EdgeId e : null_edges_) {
    const Edge& ed = g_.edge(e);
    nulls_at_[ed.u].push_back(e);
    nulls_at_[ed.v].push_back(e);
  }
}

void RecordingAdversary::begin_step(std::int64_t t, NodeId at) {
  if (t != next_t_)
    fail(Errc::Internal, "adversary steps must be committed in order");
  ++next_t_;
  absent_now_.clear();
  for (EdgeId e : nulls_at_[at]) absent_now_.insert(e);
  commit(t, at);
  history_.emplace_back(absent_now_.begin(), absent_now_.end());
}

FixedSchedule RecordingAdversary::realize() {
  auto claimed = claimed_window();
  return schedule_from_step_absences(
      g_.edge_count(), history_,
      claimed < 0 ? committed_steps() : claimed);
}

}  // namespace tgx
