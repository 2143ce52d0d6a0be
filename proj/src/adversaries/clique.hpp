#ifndef TGX_ADVERSARIES_CLIQUE_HPP
#define TGX_ADVERSARIES_CLIQUE_HPP

#include "adversaries/confinement.hpp"
#include "adversaries/recording.hpp"

namespace tgx {

/// Complete graph on g nodes minus the edge between the two gates (nodes 0
/// and 1). The blocking strategy keeps the agent away from both gates for at
/// least guaranteed_steps() moves; its witness tree stays present for the
/// whole run, so the realized schedule is interval-connected at any window.
class CliqueAdversary : public RecordingAdversary {
 public:
  explicit CliqueAdversary(std::size_t gadget_size);

  static constexpr NodeId kGateU = 0;
  static constexpr NodeId kGateV = 1;
  NodeId default_start() const { return 2; }

  void after_move(std::int64_t t, NodeId from, Port via, NodeId to) override;

  std::vector<NodeId> forbidden() const override { return {kGateU, kGateV}; }
  std::int64_t guaranteed_steps() const override {
    return GadgetConfinement::guaranteed_moves(size_);
  }
  std::int64_t claimed_window() const override { return -1; }

  const GadgetConfinement& confinement() const { return conf_; }

 protected:
  void commit(std::int64_t t, NodeId at) override;

 private:
  std::size_t size_;
  GadgetConfinement conf_;
};

}  // namespace tgx

#endif
