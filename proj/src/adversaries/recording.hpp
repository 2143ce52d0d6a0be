#ifndef TGX_ADVERSARIES_RECORDING_HPP
#define TGX_ADVERSARIES_RECORDING_HPP

#include <set>
#include <vector>

#include "schedule.hpp"

namespace tgx {

/// Builds a canonical fixed schedule from per-step absent-edge sets.
FixedSchedule schedule_from_step_absences(
    std::size_t edge_count, const std::vector<std::vector<EdgeId>>& per_step,
    std::optional<std::int64_t> claimed_window);

/// Base for adversaries with adversary-known port bijections. Handles null
/// edges (absent whenever the agent occupies an endpoint, present otherwise
/// to keep dumps maximal), records every committed step, and realizes the
/// fixed schedule from the records.
class RecordingAdversary : public Adversary {
 public:
  const PortGraph& graph() const override { return g_; }

  void begin_step(std::int64_t t, NodeId at) override;
  bool present(EdgeId e) const override { return absent_now_.count(e) == 0; }

  FixedSchedule realize() override;

  std::int64_t committed_steps() const {
    return static_cast<std::int64_t>(history_.size());
  }
  const std::vector<EdgeId>& null_edges() const { return null_edges_; }

 protected:
  RecordingAdversary(PortGraph g, std::vector<EdgeId> null_edges);

  /// Subclass hook: mark this step's deletions via mark_absent().
  virtual void commit(std::int64_t t, NodeId at) = 0;
  void mark_absent(EdgeId e) { absent_now_.insert(e); }

  PortGraph g_;

 private:
  std::vector<EdgeId> null_edges_;
  std::vector<std::vector<EdgeId>> nulls_at_;  // per node
  std::set<EdgeId> absent_now_;
  std::vector<std::vector<EdgeId>> history_;
  std::int64_t next_t_ = 0;
};

}  // namespace tgx

#endif
