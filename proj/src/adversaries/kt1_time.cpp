#include "adversaries/kt1_time.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "error.hpp"

namespace tgx {

Kt1TimeAdversary::Layout Kt1TimeAdversary::make_layout(NodeId n,
                                                       std::size_t m) {
  const std::size_t g =
      static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(m))));
  if (g < 6) fail(Errc::InvalidArgument, "construction needs m >= 36");
  if (g >= n) fail(Errc::InvalidArgument, "construction needs sqrt(m) < n");

  // Path 0..n-g-1, gadget n-g..n-1 with gates n-g and n-g+1, linked by
  // the edge {0, n-g}.
  const NodeId gate_u = static_cast<NodeId>(n - g);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i + 1 < gate_u; ++i) pairs.emplace_back(i, i + 1);
  std::vector<NodeId> members(g);
  std::iota(members.begin(), members.end(), gate_u);
  for (auto& e : gadget_edges(members, gate_u, gate_u + 1)) pairs.push_back(e);
  pairs.emplace_back(0, gate_u);

  if (pairs.size() > m)
    fail(Errc::InvalidArgument, "m too small for the construction");
  std::set<EdgeKey> taken;
  for (const auto& [a, b] : pairs) taken.insert(EdgeKey(a, b));
  std::vector<EdgeId> nulls;
  std::size_t need = m - pairs.size();
  for (NodeId a = 0; a < n && need > 0; ++a)
    for (NodeId b = a + 1; b < n && need > 0; ++b) {
      if (taken.count(EdgeKey(a, b))) continue;
      if (a == gate_u && b == gate_u + 1) continue;
      nulls.push_back(pairs.size());
      pairs.emplace_back(a, b);
      --need;
    }
  if (need > 0) fail(Errc::InvalidArgument, "m too large for null padding");
  return {PortGraph::from_pairs(n, pairs), std::move(nulls), g};
}

Kt1TimeAdversary::Kt1TimeAdversary(NodeId n, std::size_t m)
    : Kt1TimeAdversary(make_layout(n, m), n) {}

Kt1TimeAdversary::Kt1TimeAdversary(Layout layout, NodeId n)
    : RecordingAdversary(std::move(layout.graph), std::move(layout.nulls)),
      gsize_(layout.gsize),
      gate_u_(static_cast<NodeId>(n - layout.gsize)),
      gate_v_(static_cast<NodeId>(n - layout.gsize + 1)),
      conf_(g_,
            [&] {
              std::vector<NodeId> members(gsize_);
              std::iota(members.begin(), members.end(), gate_u_);
              return members;
            }(),
            gate_u_, gate_v_) {}

void Kt1TimeAdversary::commit(std::int64_t t, NodeId at) {
  if (t == 0) conf_.start(at);
  conf_.pre_move(at);
  for (EdgeId e : conf_.deleted()) mark_absent(e);
}

void Kt1TimeAdversary::after_move(std::int64_t, NodeId, Port, NodeId to) {
  conf_.post_move(to);
}

}  // namespace tgx
