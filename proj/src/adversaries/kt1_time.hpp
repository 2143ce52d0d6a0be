#ifndef TGX_ADVERSARIES_KT1_TIME_HPP
#define TGX_ADVERSARIES_KT1_TIME_HPP

#include "adversaries/confinement.hpp"
#include "adversaries/recording.hpp"

namespace tgx {

/// A path joined to a gadget of size g = floor(sqrt(m)) by one edge at the
/// first gate, padded to m with null edges. The agent starts at a trap, the
/// blocking strategy runs inside the gadget, and neither gate is reachable
/// before it completes; all its deletions persist, so the realized schedule
/// is interval-connected at the full horizon.
class Kt1TimeAdversary : public RecordingAdversary {
 public:
  Kt1TimeAdversary(NodeId n, std::size_t m);

  NodeId gate_u() const { return gate_u_; }
  NodeId gate_v() const { return gate_v_; }
  NodeId default_start() const { return gate_v_ + 1; }
  std::size_t gadget_size() const { return gsize_; }

  void after_move(std::int64_t t, NodeId from, Port via, NodeId to) override;

  std::vector<NodeId> forbidden() const override { return {gate_u_, gate_v_}; }
  std::int64_t guaranteed_steps() const override {
    return GadgetConfinement::guaranteed_moves(gsize_);
  }
  std::int64_t claimed_window() const override { return -1; }

 protected:
  void commit(std::int64_t t, NodeId at) override;

 private:
  struct Layout {
    PortGraph graph;
    std::vector<EdgeId> nulls;
    std::size_t gsize;
  };
  static Layout make_layout(NodeId n, std::size_t m);
  Kt1TimeAdversary(Layout layout, NodeId n);

  std::size_t gsize_;
  NodeId gate_u_, gate_v_;
  GadgetConfinement conf_;
};

}  // namespace tgx

#endif
