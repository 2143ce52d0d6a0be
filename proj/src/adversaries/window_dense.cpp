#include "adversaries/window_dense.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "error.hpp"

namespace tgx {

WindowDenseAdversary::Layout WindowDenseAdversary::make_layout(NodeId n,
                                                               std::size_t m) {
  if (m < 2 * static_cast<std::size_t>(n))
    fail(Errc::InvalidArgument, "dense construction needs m >= 2n");
  const std::size_t g =
      static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(m) / 8.0)));
  if (g < 6)
    fail(Errc::InvalidArgument,
         "dense construction needs m >= 288 so each gadget has 6 nodes");
  if (2 * g + 3 >= n)
    fail(Errc::InvalidArgument, "dense construction needs n > 2g + 3");

  // Nodes: gadget one 0..g-1 (gates 0,1), gadget two g..2g-1 (gates g,g+1),
  // x,y,z, then the path.
  const NodeId u1 = 0, v1 = 1, u2 = static_cast<NodeId>(g),
               v2 = static_cast<NodeId>(g + 1), x = static_cast<NodeId>(2 * g),
               y = static_cast<NodeId>(2 * g + 1), z = static_cast<NodeId>(2 * g + 2);
  const NodeId p1 = static_cast<NodeId>(2 * g + 3);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<NodeId> members1(g), members2(g);
  std::iota(members1.begin(), members1.end(), 0);
  std::iota(members2.begin(), members2.end(), static_cast<NodeId>(g));
  for (auto& e : gadget_edges(members1, u1, v1)) pairs.push_back(e);
  for (auto& e : gadget_edges(members2, u2, v2)) pairs.push_back(e);
  for (NodeId i = p1; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(u1, x);
  pairs.emplace_back(x, y);
  pairs.emplace_back(y, z);
  pairs.emplace_back(z, u2);
  pairs.emplace_back(v1, v2);
  pairs.emplace_back(x, p1);

  const std::size_t structural = pairs.size();
  if (structural > m)
    fail(Errc::InvalidArgument, "m too small for the dense construction");

  // Null padding over the remaining simple pairs, skipping the two gate
  // non-edges so the gadgets stay exactly one edge short of complete.
  std::set<EdgeKey> taken;
  for (const auto& [a, b] : pairs) taken.insert(EdgeKey(a, b));
  std::vector<EdgeId> nulls;
  std::size_t need = m - structural;
  for (NodeId a = 0; a < n && need > 0; ++a)
    for (NodeId b = a + 1; b < n && need > 0; ++b) {
      if (taken.count(EdgeKey(a, b))) continue;
      if ((a == u1 && b == v1) || (a == u2 && b == v2)) continue;
      nulls.push_back(pairs.size());
      pairs.emplace_back(a, b);
      --need;
    }
  if (need > 0) fail(Errc::InvalidArgument, "m too large for null padding");

  return {PortGraph::from_pairs(n, pairs), std::move(nulls), g, structural};
}

WindowDenseAdversary::WindowDenseAdversary(NodeId n, std::size_t m,
                                           double cprime)
    : WindowDenseAdversary(make_layout(n, m), n, m, cprime) {}

WindowDenseAdversary::WindowDenseAdversary(Layout layout, NodeId n,
                                           std::size_t m, double cprime)
    : RecordingAdversary(std::move(layout.graph), std::move(layout.nulls)),
      gsize_(layout.gsize) {
  if (!(cprime > 0.0) || cprime > 1.0 / 16.0)
    fail(Errc::InvalidArgument,
         "cprime must lie in (0, 1/16] so confinement outlasts the window");
  x_ = static_cast<NodeId>(2 * gsize_);
  y_ = static_cast<NodeId>(2 * gsize_ + 1);
  z_ = static_cast<NodeId>(2 * gsize_ + 2);
  xy_edge_ = g_.edge_between(x_, y_);
  yz_edge_ = g_.edge_between(y_, z_);
  window_ = static_cast<std::int64_t>(std::floor(cprime * static_cast<double>(m)));
  if (window_ < 1) window_ = 1;
}

bool WindowDenseAdversary::is_trap(int which, NodeId v) const {
  const NodeId base = which == 1 ? 0 : static_cast<NodeId>(gsize_);
  return v >= base + 2 && v < base + gsize_;
}

void WindowDenseAdversary::commit(std::int64_t t, NodeId at) {
  if (confined_in_ != 0 && conf_ && conf_->strategy_done()) {
    // Phase over: restore the gadget and arm the other one.
    conf_.reset();
    confined_in_ = 0;
    next_ = 3 - next_;
  }
  if (confined_in_ == 0 && is_trap(next_, at)) {
    std::vector<NodeId> members(gsize_);
    const NodeId base = next_ == 1 ? 0 : static_cast<NodeId>(gsize_);
    std::iota(members.begin(), members.end(), base);
    conf_.emplace(g_, members, base, static_cast<NodeId>(base + 1));
    conf_->start(at);
    confined_in_ = next_;
  }
  if (conf_) {
    conf_->pre_move(at);
    for (EdgeId e : conf_->deleted()) mark_absent(e);
  }
  if (at == x_) mark_absent(xy_edge_);
  if (at == z_) mark_absent(yz_edge_);
}

void WindowDenseAdversary::after_move(std::int64_t, NodeId, Port, NodeId to) {
  if (conf_) conf_->post_move(to);
}

}  // namespace tgx
