#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "error.hpp"

namespace tgx {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Instance& inst) {
  ordered_json j;
  j["n"] = inst.graph.node_count();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : inst.graph.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"pu", e.pu}, {"pv", e.pv}});
  j["edges"] = std::move(edges);
  ordered_json absent = ordered_json::array();
  for (EdgeId e = 0; e < inst.schedule.edge_count(); ++e)
    for (const AbsenceInterval& iv : inst.schedule.absences(e))
      absent.push_back({{"edge", e}, {"from", iv.from}, {"to", iv.to}});
  j["absent"] = std::move(absent);
  if (inst.schedule.claimed_window())
    j["claimed_T"] = *inst.schedule.claimed_window();
  else
    j["claimed_T"] = nullptr;
  j["horizon"] = inst.schedule.horizon();
  if (inst.forbidden) j["forbidden"] = *inst.forbidden;
  if (inst.guaranteed_steps) j["guaranteed_steps"] = *inst.guaranteed_steps;
  return j.dump();
}

Instance instance_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::Parse, std::string("instance parse error: ") + e.what());
  }
  try {
    const NodeId n = j.at("n").get<NodeId>();
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges"))
      edges.push_back(Edge{je.at("u").get<NodeId>(), je.at("v").get<NodeId>(),
                           je.at("pu").get<Port>(), je.at("pv").get<Port>()});
    PortGraph g = PortGraph::from_edges(n, std::move(edges));

    std::optional<std::int64_t> claimed;
    if (!j.at("claimed_T").is_null())
      claimed = j.at("claimed_T").get<std::int64_t>();
    const std::int64_t horizon = j.at("horizon").get<std::int64_t>();
    FixedSchedule s(g.edge_count(), horizon, claimed);
    std::int64_t prev_edge = -1, prev_to = -1;
    for (const auto& ja : j.at("absent")) {
      const auto e = ja.at("edge").get<std::int64_t>();
      const auto from = ja.at("from").get<std::int64_t>();
      const auto to = ja.at("to").get<std::int64_t>();
      // Canonical order keeps round-trips bit-exact.
      if (e < prev_edge || (e == prev_edge && from <= prev_to + 1))
        fail(Errc::Parse,
             "absence intervals must be sorted by edge and disjoint");
      prev_edge = e;
      prev_to = to;
      s.add_absence(static_cast<EdgeId>(e), from, to);
    }

    Instance inst{std::move(g), std::move(s), std::nullopt, std::nullopt};
    if (j.contains("forbidden")) inst.forbidden = j.at("forbidden").get<NodeId>();
    if (j.contains("guaranteed_steps"))
      inst.guaranteed_steps = j.at("guaranteed_steps").get<std::int64_t>();
    return inst;
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("instance field error: ") + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot open for writing: " + path);
  out << to_json(inst);
  out << '\n';
  if (!out) fail(Errc::Io, "write failed: " + path);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Trailing newline from save_instance is not part of the document.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return instance_from_json(text);
}

}  // namespace tgx
