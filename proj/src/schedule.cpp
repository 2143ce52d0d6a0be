#include "schedule.hpp"

#include <algorithm>

#include "error.hpp"

namespace tgx {

FixedSchedule::FixedSchedule(std::size_t edge_count, std::int64_t horizon,
                             std::optional<std::int64_t> claimed_window)
    : horizon_(horizon), claimed_(claimed_window), absence_(edge_count) {
  if (horizon < 0) fail(Errc::InvalidArgument, "schedule horizon must be >= 0");
}

void FixedSchedule::add_absence(EdgeId e, std::int64_t from, std::int64_t to) {
  if (e >= absence_.size()) fail(Errc::Range, "absence: edge id out of range");
  if (from > to || from < 0 || to >= horizon_)
    fail(Errc::Range, "absence interval outside [0..horizon)");
  auto& ivs = absence_[e];
  ivs.push_back({from, to});
  std::sort(ivs.begin(), ivs.end(),
            [](const AbsenceInterval& a, const AbsenceInterval& b) {
              return a.from < b.from;
            });
  // Merge overlapping or adjacent intervals.
  std::vector<AbsenceInterval> merged;
  for (const auto& iv : ivs) {
    if (!merged.empty() && iv.from <= merged.back().to + 1)
      merged.back().to = std::max(merged.back().to, iv.to);
    else
      merged.push_back(iv);
  }
  ivs = std::move(merged);
}

bool FixedSchedule::present(EdgeId e, std::int64_t t) const {
  if (e >= absence_.size()) fail(Errc::Range, "presence: edge id out of range");
  if (t < 0 || t >= horizon_) fail(Errc::Range, "presence: time outside horizon");
  const auto& ivs = absence_[e];
  auto it = std::upper_bound(ivs.begin(), ivs.end(), t,
                             [](std::int64_t x, const AbsenceInterval& iv) {
                               return x < iv.from;
                             });
  if (it == ivs.begin()) return true;
  --it;
  return t > it->to;
}

bool FixedSchedule::present_throughout(EdgeId e, std::int64_t a,
                                       std::int64_t b) const {
  if (e >= absence_.size()) fail(Errc::Range, "presence: edge id out of range");
  if (a > b || a < 0 || b >= horizon_)
    fail(Errc::Range, "window outside realized horizon");
  const auto& ivs = absence_[e];
  auto it = std::upper_bound(ivs.begin(), ivs.end(), b,
                             [](std::int64_t x, const AbsenceInterval& iv) {
                               return x < iv.from;
                             });
  if (it == ivs.begin()) return true;
  --it;
  return it->to < a;
}

std::vector<Port> Adversary::available_ports(NodeId at) const {
  std::vector<Port> out;
  for (const auto& inc : graph().incident(at))
    if (present(inc.edge)) out.push_back(inc.port);
  return out;
}

NodeId Adversary::resolve_move(NodeId at, Port p) {
  return graph().neighbor_at(at, p);
}

Port Adversary::arrival_port(NodeId at, NodeId from) {
  return graph().port_to(at, from);
}

}  // namespace tgx
