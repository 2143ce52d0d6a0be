#include "adversaries/window_sparse.hpp"

#include "error.hpp"

namespace tgx {

WindowSparseAdversary::Layout WindowSparseAdversary::make_layout(
    NodeId n, std::size_t m) {
  if (n < 5) fail(Errc::InvalidArgument, "cycle construction needs n >= 5");
  if (m < n || m >= 2 * static_cast<std::size_t>(n))
    fail(Errc::InvalidArgument, "sparse construction needs n <= m < 2n");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  // Null padding: lexicographically first non-cycle pairs.
  std::size_t need = m - n;
  std::vector<EdgeId> nulls;
  for (NodeId u = 0; u < n && need > 0; ++u)
    for (NodeId v = u + 2; v < n && need > 0; ++v) {
      if (u == 0 && v == n - 1) continue;  // the closing cycle edge
      nulls.push_back(pairs.size());
      pairs.emplace_back(u, v);
      --need;
    }
  if (need > 0) fail(Errc::InvalidArgument, "m too large for null padding");
  return {PortGraph::from_pairs(n, pairs), std::move(nulls)};
}

WindowSparseAdversary::WindowSparseAdversary(NodeId n, std::size_t m)
    : WindowSparseAdversary(make_layout(n, m), n) {}

WindowSparseAdversary::WindowSparseAdversary(Layout layout, NodeId n)
    : RecordingAdversary(std::move(layout.graph), std::move(layout.nulls)),
      n_(n) {
  left_edge_ = g_.edge_between(0, 1);
  right_edge_ = g_.edge_between(1, 2);
}

void WindowSparseAdversary::commit(std::int64_t, NodeId at) {
  if (at == 0) mark_absent(left_edge_);
  if (at == 2) mark_absent(right_edge_);
}

}  // namespace tgx
