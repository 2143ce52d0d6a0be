#ifndef TGX_JSON_IO_HPP
#define TGX_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"
#include "schedule.hpp"

namespace tgx {

/// A port graph plus a fixed presence schedule; the on-disk unit of work.
/// Adversary dumps additionally carry the node the construction protects and
/// the step bound it guarantees.
struct Instance {
  PortGraph graph;
  FixedSchedule schedule;
  std::optional<NodeId> forbidden;
  std::optional<std::int64_t> guaranteed_steps;
};

/// Serializes with a fixed key order so that parse -> serialize is the
/// identity on anything this writer produced.
std::string to_json(const Instance& inst);

Instance instance_from_json(std::string_view text);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

}  // namespace tgx

#endif
