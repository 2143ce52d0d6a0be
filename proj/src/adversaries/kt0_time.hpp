#ifndef TGX_ADVERSARIES_KT0_TIME_HPP
#define TGX_ADVERSARIES_KT0_TIME_HPP

#include <map>
#include <set>

#include "adversaries/recording.hpp"

namespace tgx {

/// Path v_0..v_{n-1} with trap edges between the left third and the nodes
/// just past the right-third mark, padded to m with null edges. Path edges
/// never vanish. Trap edges vanish while the agent stands at their left
/// endpoint, null edges while the agent stands at either endpoint.
///
/// Port labels are bound lazily: when the agent leaves through a port it has
/// never used, that port is bound on the spot to an unused present edge,
/// trap edges first; the incoming port at the destination binds to the
/// smallest unbound port there. Unbound ports are reported available by
/// ascending rank, one per present unbound edge, which a zero-hop agent
/// cannot distinguish from a fixed labeling; the final binding extends to a
/// bijection at every node. Reaching the last path node therefore costs at
/// least one left-third round trip per trap edge.
class Kt0TimeAdversary : public Adversary {
 public:
  Kt0TimeAdversary(NodeId n, std::size_t m);

  const PortGraph& graph() const override { return g_; }
  bool supports_kt1() const override { return false; }

  void begin_step(std::int64_t t, NodeId at) override;
  bool present(EdgeId e) const override;
  std::vector<Port> available_ports(NodeId at) const override;
  NodeId resolve_move(NodeId at, Port p) override;
  Port arrival_port(NodeId at, NodeId from) override;

  FixedSchedule realize() override;
  PortGraph realized_graph() const override;

  std::vector<NodeId> forbidden() const override {
    return {static_cast<NodeId>(g_.node_count() - 1)};
  }
  std::int64_t guaranteed_steps() const override { return guaranteed_; }
  std::int64_t claimed_window() const override { return -1; }

  NodeId default_start() const { return 0; }
  std::size_t trap_edge_count() const { return trap_count_; }

  /// Bound (port -> edge) pairs at v so far; duplicate-free by construction.
  const std::map<Port, EdgeId>& bindings(NodeId v) const;

 private:
  enum class Kind { Path, Trap, Null };

  bool left_side(NodeId v) const { return v < left_size_; }
  bool suppressed_at(NodeId v, EdgeId e) const;
  std::vector<EdgeId> unbound_edges(NodeId v) const;
  std::vector<Port> unbound_ports(NodeId v) const;
  void bind(NodeId v, Port p, EdgeId e);
  void complete_bindings();

  PortGraph g_;
  std::vector<Kind> kind_;
  NodeId left_size_ = 0;   // |V_L|
  NodeId right_from_ = 0;  // first node of V_R
  std::size_t trap_count_ = 0;
  std::int64_t guaranteed_ = 0;

  std::vector<std::map<Port, EdgeId>> bound_;       // per node: port -> edge
  std::vector<std::map<EdgeId, Port>> bound_rev_;   // per node: edge -> port
  std::vector<std::set<Port>> ever_reported_;       // unbound ports, per node
  std::vector<char> visited_;

  struct StepRecord {
    NodeId at;
    std::vector<Port> reported;
  };
  std::vector<StepRecord> records_;
  std::int64_t next_t_ = 0;
  NodeId current_ = 0;
  std::vector<Port> current_report_;
  bool finalized_ = false;
};

}  // namespace tgx

#endif
