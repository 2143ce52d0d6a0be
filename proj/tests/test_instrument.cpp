#include <cmath>

#include "agents/greedy_exp1.hpp"
#include "doctest.h"
#include "engine.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "helpers.hpp"
#include "instrument.hpp"
#include "window.hpp"

using namespace tgx;

namespace {

Trace ge1_run(const Instance& inst, std::int64_t max_steps) {
  GreedyExp1Agent agent;
  return run(inst.graph, inst.schedule, agent, {0, Model::Kt1, max_steps});
}

}  // namespace

TEST_CASE("static runs eliminate no edges") {
  PortGraph g = PortGraph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}});
  FixedSchedule s = test::static_schedule(g, 100);
  Instance inst{std::move(g), std::move(s), std::nullopt, std::nullopt};
  Trace t = ge1_run(inst, 100);
  REQUIRE(t.outcome == RunOutcome::Terminated);
  const auto instr = instrument_potential(t);
  for (const auto& [e, charge] : instr.iota_e) CHECK(charge == 0);
  CHECK(instr.sum_iota_e() == 0);
}

TEST_CASE("hand replay of the three-node path") {
  PortGraph g = test::path3();
  FixedSchedule s = test::static_schedule(g, 100);
  Instance inst{std::move(g), std::move(s), std::nullopt, std::nullopt};
  Trace t = ge1_run(inst, 100);
  REQUIRE(t.outcome == RunOutcome::Terminated);
  REQUIRE(t.moves == 2);
  const auto instr = instrument_potential(t);
  CHECK(instr.d_series == std::vector<std::int64_t>{1, 1, 0});
  CHECK(instr.iota_v.at(0) == 0);
  CHECK(instr.iota_v.at(1) == 0);
  CHECK(instr.iota_v.at(2) == -1);
  CHECK(instr.sum_iota_v() == -1);
  // Exploration finished in exactly n + sum_v + sum_e = 3 - 1 + 0 steps.
  CHECK(t.moves == 3 + instr.sum_iota_v() + instr.sum_iota_e());
}

TEST_CASE("potential accounting bounds the exploration time") {
  Rng rng(97531);
  for (int trial = 0; trial < 25; ++trial) {
    GenConfig cfg;
    cfg.n = static_cast<std::uint32_t>(5 + rng.below(30));
    const std::uint64_t full =
        static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1) / 2;
    cfg.m = cfg.n + rng.below(full - cfg.n + 1);
    cfg.window = tau(cfg.n, cfg.m, 16);
    cfg.seed = rng.next();
    cfg.churn = trial % 3 ? 0.6 : 0.0;
    const std::int64_t max_steps = 4 * tau(cfg.n, cfg.m, 16);
    Instance inst = gen_instance(cfg, max_steps + 1);
    Trace t = ge1_run(inst, max_steps);
    REQUIRE(t.outcome == RunOutcome::Terminated);
    const auto instr = instrument_potential(t);
    // The potential argument: t_end <= n + sum iota_v + sum iota_e.
    CHECK(t.moves <= static_cast<std::int64_t>(cfg.n) + instr.sum_iota_v() +
                         instr.sum_iota_e());
    // First-visit charges never exceed 2 n log2 n in total.
    CHECK(static_cast<double>(instr.sum_iota_v()) <=
          2.0 * cfg.n * std::log2(static_cast<double>(cfg.n)));
    // The potential never goes negative.
    for (std::int64_t d : instr.d_series) CHECK(d >= 0);
  }
}

TEST_CASE("replay rejects tampered traces") {
  PortGraph g =
      PortGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});
  FixedSchedule s = test::static_schedule(g, 100);
  Instance inst{std::move(g), std::move(s), std::nullopt, std::nullopt};
  Trace t = ge1_run(inst, 100);
  REQUIRE(t.outcome == RunOutcome::Terminated);
  REQUIRE(t.steps.size() >= 2);
  Trace bad = t;
  bad.steps[0].move_port = *bad.steps[0].move_port + 1;
  CHECK_THROWS_AS(instrument_potential(bad), Error);
}

TEST_CASE("zero-hop traces are rejected") {
  PortGraph g = test::path3();
  FixedSchedule s = test::static_schedule(g, 10);
  Trace t;
  TraceStep step;
  step.obs = build_observation(g, s, 0, 0, std::nullopt, Model::Kt0);
  t.steps.push_back(step);
  CHECK_THROWS_AS(instrument_potential(t), Error);
}

TEST_CASE("nearest-later-neighbor distances stay under 2 n log2 n") {
  Rng rng(11223);
  for (int trial = 0; trial < 200; ++trial) {
    const NodeId n = static_cast<NodeId>(1 + rng.below(16));
    std::vector<std::pair<NodeId, NodeId>> pairs;
    if (n > 1) {
      const std::size_t full = static_cast<std::size_t>(n) * (n - 1) / 2;
      pairs = test::random_connected_pairs(
          n, std::min<std::size_t>(full, n - 1 + rng.below(n)), rng);
    }
    // Random visiting order.
    std::vector<NodeId> order(n);
    for (NodeId i = 0; i < n; ++i) order[i] = i;
    for (NodeId i = n; i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);

    const auto dist = test::floyd_warshall(n, pairs);
    std::int64_t total = 0;
    for (NodeId i = 0; i + 1 < n; ++i) {
      std::int64_t best = 1 << 28;
      for (NodeId j = i + 1; j < n; ++j)
        best = std::min(best, dist[order[i]][order[j]]);
      total += best;
    }
    CHECK(static_cast<double>(total) <=
          2.0 * n * std::log2(std::max<double>(2.0, n)) + 1e-9);
  }
}
