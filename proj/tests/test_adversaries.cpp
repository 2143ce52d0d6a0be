#include <memory>

#include "adversaries/clique.hpp"
#include "adversaries/kt0_time.hpp"
#include "adversaries/kt1_time.hpp"
#include "adversaries/window_dense.hpp"
#include "adversaries/window_sparse.hpp"
#include "agents/greedy_exp0.hpp"
#include "agents/greedy_exp1.hpp"
#include "agents/left_hand.hpp"
#include "doctest.h"
#include "engine.hpp"
#include "error.hpp"
#include "helpers.hpp"

using namespace tgx;

namespace {

std::unique_ptr<Agent> make_agent(int which) {
  if (which == 0) return std::make_unique<GreedyExp0Agent>(16);
  if (which == 1) return std::make_unique<GreedyExp1Agent>();
  return std::make_unique<LeftHandAgent>();
}

Model model_for(int which) { return which == 1 ? Model::Kt1 : Model::Kt0; }

std::int64_t first_reach(const Trace& t, const std::vector<NodeId>& nodes) {
  std::int64_t best = -1;
  for (NodeId v : nodes) {
    const std::int64_t at = t.first_visit(v);
    if (at >= 0 && (best < 0 || at < best)) best = at;
  }
  return best;
}

// Null edges must be absent whenever the agent stands at an endpoint.
void check_null_rule(const PortGraph& g, const FixedSchedule& s,
                     const std::vector<EdgeId>& nulls, const Trace& t) {
  for (const auto& step : t.steps)
    for (EdgeId e : nulls) {
      const Edge& ed = g.edge(e);
      if (ed.u == step.node || ed.v == step.node)
        CHECK_FALSE(s.present(e, step.t));
    }
}

}  // namespace

TEST_CASE("clique confinement holds all agents away from the gates") {
  for (std::size_t g : {10u, 20u, 30u}) {
    const std::int64_t bound = GadgetConfinement::guaranteed_moves(g);
    // Independent evaluation of the strategy-length sum.
    std::int64_t expect = 0;
    for (std::int64_t k = 2; k <= static_cast<std::int64_t>(g) - 3; ++k)
      expect += static_cast<std::int64_t>(g) - 2 - k;
    CHECK(bound == expect);
    for (int which = 0; which < 3; ++which) {
      CliqueAdversary adv(g);
      auto agent = make_agent(which);
      Trace t = run(adv, *agent, {adv.default_start(), model_for(which), 3000});
      const std::int64_t reached = first_reach(t, adv.forbidden());
      if (reached >= 0) CHECK(reached >= bound);
      // Realized schedule is interval-connected at the full horizon.
      FixedSchedule realized = adv.realize();
      if (realized.horizon() > 0)
        CHECK(verify_interval_connectivity(adv.graph(), realized,
                                           realized.horizon())
                  .ok);
    }
  }
}

TEST_CASE("clique frozen bounds") {
  CHECK(GadgetConfinement::guaranteed_moves(10) == 21);
  CHECK(GadgetConfinement::guaranteed_moves(20) == 136);
  CHECK(GadgetConfinement::guaranteed_moves(30) == 351);
}

TEST_CASE("clique blocking rule: no edge to a blocked node at move time") {
  CliqueAdversary adv(12);
  GreedyExp1Agent agent;
  // Drive manually so the blocked set can be inspected mid-run.
  const NodeId start = adv.default_start();
  NodeId current = start;
  std::optional<Port> incoming;
  for (std::int64_t t = 0; t < 200; ++t) {
    adv.begin_step(t, current);
    if (!adv.confinement().strategy_done())
      for (NodeId w : adv.confinement().blocked())
        if (adv.graph().has_edge(current, w))
          CHECK_FALSE(adv.present(adv.graph().edge_between(current, w)));
    Observation obs;
    obs.t = t;
    obs.node = current;
    obs.degree = adv.graph().degree(current);
    obs.available = adv.available_ports(current);
    obs.incoming = incoming;
    std::vector<std::pair<NodeId, Port>> view;
    for (Port p : obs.available)
      view.emplace_back(adv.graph().neighbor_at(current, p), p);
    obs.view = std::move(view);
    const AgentAction act = agent.step(obs);
    if (act.kind == AgentAction::Kind::Terminate) break;
    const NodeId next = adv.resolve_move(current, act.port);
    adv.after_move(t, current, act.port, next);
    incoming = adv.arrival_port(next, current);
    current = next;
  }
}

TEST_CASE("clique rejects undersized gadgets and gate starts") {
  CHECK_THROWS_AS(CliqueAdversary(5), Error);
  CliqueAdversary adv(8);
  GreedyExp1Agent agent;
  CHECK_THROWS_AS(run(adv, agent, {CliqueAdversary::kGateU, Model::Kt1, 10}),
                  Error);
}

TEST_CASE("dense window adversary protects y and its claimed window") {
  const NodeId n = 60;
  const std::size_t m = 300;
  // Structural edge count: two gadgets, the path, six connectors.
  const std::size_t g = 6;
  const std::size_t e0 = 2 * (g * (g - 1) / 2 - 1) + (n - 2 * g - 4) + 6;
  CHECK(e0 == 78);
  for (int which : {0, 1}) {
    WindowDenseAdversary adv(n, m, 0.05);
    CHECK(adv.null_edges().size() == m - e0);
    CHECK(adv.claimed_window() == 15);
    auto agent = make_agent(which);
    Trace t = run(adv, *agent, {adv.default_start(), model_for(which), 5000});
    CHECK(t.first_visit(adv.node_y()) == -1);
    FixedSchedule realized = adv.realize();
    CHECK(verify_interval_connectivity(adv.graph(), realized, 15).ok);
    check_null_rule(adv.graph(), realized, adv.null_edges(), t);
    // The x-side chain edge is gone exactly when the agent stands at x.
    const EdgeId xy = adv.graph().edge_between(adv.node_x(), adv.node_y());
    for (const auto& step : t.steps)
      if (step.node == adv.node_x())
        CHECK_FALSE(realized.present(xy, step.t));
  }
}

TEST_CASE("dense window adversary validates its parameters") {
  CHECK_THROWS_AS(WindowDenseAdversary(60, 300, 0.2), Error);   // cprime cap
  CHECK_THROWS_AS(WindowDenseAdversary(60, 200, 0.03), Error);  // g < 6
  CHECK_THROWS_AS(WindowDenseAdversary(14, 300, 0.03), Error);  // n <= 2g+3
}

TEST_CASE("sparse window adversary protects node 1") {
  for (int which : {0, 1, 2}) {
    WindowSparseAdversary adv(20, 25);
    CHECK(adv.claimed_window() == 17);
    auto agent = make_agent(which);
    Trace t = run(adv, *agent, {adv.default_start(), model_for(which), 5000});
    CHECK(t.first_visit(1) == -1);
    FixedSchedule realized = adv.realize();
    CHECK(verify_interval_connectivity(adv.graph(), realized, 17).ok);
    check_null_rule(adv.graph(), realized, adv.null_edges(), t);
    // Within any claimed window the two cycle edges at node 1 never vanish
    // together.
    const EdgeId left = adv.graph().edge_between(0, 1);
    const EdgeId right = adv.graph().edge_between(1, 2);
    for (std::int64_t t0 = 0; t0 + 17 <= realized.horizon(); ++t0) {
      const bool left_out = !realized.present_throughout(left, t0, t0 + 16);
      const bool right_out = !realized.present_throughout(right, t0, t0 + 16);
      const bool both_out = left_out && right_out;
      CHECK_FALSE(both_out);
    }
  }
}

TEST_CASE("one-hop time adversary keeps both gates unreached") {
  const std::size_t e0 = 20 * 19 / 2 - 1 + 40 - 20;
  CHECK(e0 == 209);
  for (int which : {0, 1, 2}) {
    Kt1TimeAdversary adv(40, 400);
    CHECK(adv.gadget_size() == 20);
    CHECK(adv.guaranteed_steps() == 136);
    CHECK(adv.null_edges().size() == 400 - e0);
    auto agent = make_agent(which);
    Trace t = run(adv, *agent, {adv.default_start(), model_for(which), 2000});
    const std::int64_t reached =
        first_reach(t, {adv.gate_u(), adv.gate_v()});
    if (reached >= 0) CHECK(reached >= 136);
    FixedSchedule realized = adv.realize();
    CHECK(verify_interval_connectivity(adv.graph(), realized,
                                       realized.horizon())
              .ok);
  }
}

TEST_CASE("zero-hop time adversary: construction arithmetic") {
  Kt0TimeAdversary adv(30, 100);
  CHECK(adv.trap_edge_count() == 71);
  CHECK(adv.guaranteed_steps() == 710);
  CHECK(adv.forbidden() == std::vector<NodeId>{29});
}

TEST_CASE("zero-hop time adversary delays the last node") {
  for (int which : {0, 2}) {  // zero-hop agents only
    Kt0TimeAdversary adv(30, 100);
    auto agent = make_agent(which);
    Trace t = run(adv, *agent, {adv.default_start(), Model::Kt0, 20000});
    const std::int64_t reached = t.first_visit(29);
    if (reached >= 0) CHECK(reached >= 710);
    FixedSchedule realized = adv.realize();
    // Path edges never vanish, hence connectivity at every window size.
    for (EdgeId e = 0; e + 1 < 30; ++e)
      CHECK(realized.absences(e).empty());
    CHECK(verify_interval_connectivity(adv.graph(), realized,
                                       realized.horizon())
              .ok);
    CHECK(verify_interval_connectivity(adv.graph(), realized, 1).ok);
    // The realized port assignment is a full bijection at every node;
    // building the graph validates it.
    const PortGraph rg = adv.realized_graph();
    // Realized availability matches what the agent was shown.
    for (const auto& step : t.steps) {
      std::vector<Port> from_dump;
      for (const auto& inc : rg.incident(step.node))
        if (realized.present(inc.edge, step.t)) from_dump.push_back(inc.port);
      CHECK(from_dump == step.obs.available);
    }
  }
}

TEST_CASE("zero-hop time adversary refuses the one-hop model") {
  Kt0TimeAdversary adv(30, 100);
  GreedyExp1Agent agent;
  CHECK_THROWS_AS(run(adv, agent, {0, Model::Kt1, 100}), Error);
}

TEST_CASE("zero-hop bindings stay duplicate-free while running") {
  Kt0TimeAdversary adv(30, 100);
  GreedyExp0Agent agent(16);
  // Short manual drive, checking bindings after every step.
  NodeId current = adv.default_start();
  std::optional<Port> incoming;
  for (std::int64_t t = 0; t < 300; ++t) {
    adv.begin_step(t, current);
    Observation obs;
    obs.t = t;
    obs.node = current;
    obs.degree = adv.graph().degree(current);
    obs.available = adv.available_ports(current);
    obs.incoming = incoming;
    const AgentAction act = agent.step(obs);
    REQUIRE(act.kind == AgentAction::Kind::Move);
    const NodeId next = adv.resolve_move(current, act.port);
    adv.after_move(t, current, act.port, next);
    incoming = adv.arrival_port(next, current);
    current = next;
    for (NodeId v = 0; v < adv.graph().node_count(); ++v) {
      const auto& b = adv.bindings(v);
      std::set<EdgeId> edges;
      for (const auto& [p, e] : b) {
        CHECK(p >= 1);
        CHECK(p <= adv.graph().degree(v));
        CHECK(edges.insert(e).second);  // no edge bound twice
      }
    }
  }
}

TEST_CASE("adversary dumps carry forbidden node and guarantee") {
  CliqueAdversary adv(10);
  GreedyExp1Agent agent;
  Trace t = run(adv, agent, {adv.default_start(), Model::Kt1, 500});
  Instance dump{adv.realized_graph(), adv.realize(), adv.forbidden().front(),
                adv.guaranteed_steps()};
  const std::string text = to_json(dump);
  Instance back = instance_from_json(text);
  CHECK(*back.forbidden == 0);
  CHECK(*back.guaranteed_steps == 21);
  CHECK(to_json(back) == text);
}
