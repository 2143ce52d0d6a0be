#include "adversaries/clique.hpp"

#include <numeric>

#include "error.hpp"

namespace tgx {

namespace {

PortGraph make_gadget_graph(std::size_t g) {
  if (g < 6) fail(Errc::InvalidArgument, "gadget size must be at least 6");
  std::vector<NodeId> members(g);
  std::iota(members.begin(), members.end(), 0);
  return PortGraph::from_pairs(static_cast<NodeId>(g),
                               gadget_edges(members, 0, 1));
}

std::vector<NodeId> all_members(std::size_t g) {
  std::vector<NodeId> members(g);
  std::iota(members.begin(), members.end(), 0);
  return members;
}

}  // namespace

CliqueAdversary::CliqueAdversary(std::size_t gadget_size)
    : RecordingAdversary(make_gadget_graph(gadget_size), {}),
      size_(gadget_size),
      conf_(g_, all_members(gadget_size), kGateU, kGateV) {}

void CliqueAdversary::commit(std::int64_t t, NodeId at) {
  if (t == 0) conf_.start(at);
  conf_.pre_move(at);
  // Deletions persist after the strategy completes; nothing is restored.
  for (EdgeId e : conf_.deleted()) mark_absent(e);
}

void CliqueAdversary::after_move(std::int64_t, NodeId, Port, NodeId to) {
  conf_.post_move(to);
}

}  // namespace tgx
