#ifndef TGX_ADVERSARIES_WINDOW_SPARSE_HPP
#define TGX_ADVERSARIES_WINDOW_SPARSE_HPP

#include "adversaries/recording.hpp"

namespace tgx {

/// Cycle on n nodes padded with null edges up to m. The two cycle edges at
/// node 1 vanish exactly while the agent stands at node 0 or node 2, so node
/// 1 is never enterable; a full trip between those nodes takes n-2 steps,
/// which keeps every (n-3)-window connected.
class WindowSparseAdversary : public RecordingAdversary {
 public:
  WindowSparseAdversary(NodeId n, std::size_t m);

  NodeId default_start() const { return 0; }

  std::vector<NodeId> forbidden() const override { return {1}; }
  std::int64_t guaranteed_steps() const override { return -1; }
  std::int64_t claimed_window() const override { return n_ - 3; }

 protected:
  void commit(std::int64_t t, NodeId at) override;

 private:
  struct Layout {
    PortGraph graph;
    std::vector<EdgeId> nulls;
  };
  static Layout make_layout(NodeId n, std::size_t m);
  explicit WindowSparseAdversary(Layout layout, NodeId n);

  std::int64_t n_;
  EdgeId left_edge_, right_edge_;  // {0,1} and {1,2}
};

}  // namespace tgx

#endif
