#ifndef TGX_SCHEDULE_HPP
#define TGX_SCHEDULE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tgx {

/// Closed interval of time steps during which an edge is absent.
struct AbsenceInterval {
  std::int64_t from, to;
  friend bool operator==(const AbsenceInterval&, const AbsenceInterval&) = default;
};

/// Edge presence over [0..horizon): per edge, a sorted list of disjoint,
/// non-adjacent absence intervals. Sparse by design; adversaries delete few
/// edges and horizons can reach 10^6.
class FixedSchedule {
 public:
  FixedSchedule() = default;
  FixedSchedule(std::size_t edge_count, std::int64_t horizon,
                std::optional<std::int64_t> claimed_window);

  /// Marks edge e absent during [from..to]; merged into canonical form.
  void add_absence(EdgeId e, std::int64_t from, std::int64_t to);

  bool present(EdgeId e, std::int64_t t) const;

  std::int64_t horizon() const { return horizon_; }
  std::optional<std::int64_t> claimed_window() const { return claimed_; }
  void set_claimed_window(std::optional<std::int64_t> T) { claimed_ = T; }

  std::size_t edge_count() const { return absence_.size(); }
  const std::vector<AbsenceInterval>& absences(EdgeId e) const {
    return absence_[e];
  }

  /// True when no absence interval of e intersects [a..b].
  bool present_throughout(EdgeId e, std::int64_t a, std::int64_t b) const;

 private:
  std::int64_t horizon_ = 0;
  std::optional<std::int64_t> claimed_;
  std::vector<std::vector<AbsenceInterval>> absence_;
};

class Agent;
enum class Model { Kt0, Kt1 };

/// Adaptive schedule: a single-run state machine that commits the present
/// edge set each step after seeing the agent's position, and may take over
/// the port semantics (the zero-hop time adversary binds ports lazily).
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual const PortGraph& graph() const = 0;

  /// Commits E(t); called exactly once per step in ascending t, before the
  /// agent observes.
  virtual void begin_step(std::int64_t t, NodeId agent) = 0;

  /// Presence within the step committed last. Valid only after begin_step.
  virtual bool present(EdgeId e) const = 0;

  /// Whether consistent one-hop views can be served. Lazy port binding
  /// cannot fake them, so the zero-hop time adversary returns false.
  virtual bool supports_kt1() const { return true; }

  /// Ports available at the agent's node within the committed step.
  virtual std::vector<Port> available_ports(NodeId at) const;

  /// Resolves a move through port p; may bind the port on first use.
  virtual NodeId resolve_move(NodeId at, Port p);

  /// Port at `at` leading back to `from`, reported on arrival; may bind.
  virtual Port arrival_port(NodeId at, NodeId from);

  /// Notification after the agent's move at step t.
  virtual void after_move(std::int64_t t, NodeId from, Port via, NodeId to) {}

  /// Realized schedule over the committed steps; called once, after the run.
  virtual FixedSchedule realize() = 0;

  /// Port bijections realized by the run (identical to graph() unless the
  /// adversary binds ports lazily).
  virtual PortGraph realized_graph() const { return graph(); }

  /// Nodes the construction keeps the agent away from.
  virtual std::vector<NodeId> forbidden() const = 0;

  /// Steps the forbidden nodes are guaranteed unreached; -1 means for the
  /// whole run.
  virtual std::int64_t guaranteed_steps() const = 0;

  /// Window size the realized schedule is claimed to satisfy; -1 means the
  /// full realized horizon.
  virtual std::int64_t claimed_window() const = 0;
};

}  // namespace tgx

#endif
