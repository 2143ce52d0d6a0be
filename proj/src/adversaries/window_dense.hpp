#ifndef TGX_ADVERSARIES_WINDOW_DENSE_HPP
#define TGX_ADVERSARIES_WINDOW_DENSE_HPP

#include <optional>

#include "adversaries/confinement.hpp"
#include "adversaries/recording.hpp"

namespace tgx {

/// Two gadgets of size g = floor(sqrt(m/8)) joined through the three-node
/// chain x-y-z and a path, padded to m with null edges. The chain edges at y
/// vanish exactly while the agent stands at x or z, and every trip between x
/// and z runs through a trap of the currently armed gadget, where the
/// blocking strategy holds the agent long enough that both y-edges never
/// disappear within one claimed window. Arming alternates between the two
/// gadgets so the dormant one stays deletion-free; a confinement phase ends
/// when its strategy completes.
class WindowDenseAdversary : public RecordingAdversary {
 public:
  WindowDenseAdversary(NodeId n, std::size_t m, double cprime);

  NodeId default_start() const { return g_.node_count() - 1; }  // path end
  NodeId node_x() const { return x_; }
  NodeId node_y() const { return y_; }
  NodeId node_z() const { return z_; }
  std::size_t gadget_size() const { return gsize_; }
  int armed() const { return next_; }

  void after_move(std::int64_t t, NodeId from, Port via, NodeId to) override;

  std::vector<NodeId> forbidden() const override { return {y_}; }
  std::int64_t guaranteed_steps() const override { return -1; }
  std::int64_t claimed_window() const override { return window_; }

 protected:
  void commit(std::int64_t t, NodeId at) override;

 private:
  struct Layout {
    PortGraph graph;
    std::vector<EdgeId> nulls;
    std::size_t gsize;
    std::size_t structural_edges;
  };
  static Layout make_layout(NodeId n, std::size_t m);
  WindowDenseAdversary(Layout layout, NodeId n, std::size_t m, double cprime);

  bool is_trap(int which, NodeId v) const;

  std::size_t gsize_;
  NodeId x_, y_, z_;
  EdgeId xy_edge_, yz_edge_;
  std::int64_t window_;
  int next_ = 1;
  std::optional<GadgetConfinement> conf_;
  int confined_in_ = 0;  // 0 = none
};

}  // namespace tgx

#endif
