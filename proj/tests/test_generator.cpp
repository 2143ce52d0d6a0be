#include "agents/greedy_exp1.hpp"
#include "doctest.h"
#include "engine.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "helpers.hpp"
#include "window.hpp"

using namespace tgx;

TEST_CASE("zero churn produces a static schedule") {
  GenConfig cfg{10, 20, 5, 42, 0.0};
  Instance inst = gen_instance(cfg, 300);
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
    CHECK(inst.schedule.absences(e).empty());
  CHECK(verify_interval_connectivity(inst.graph, inst.schedule, 300).ok);
}

TEST_CASE("churny instances still verify at the full horizon") {
  GenConfig cfg{20, 60, 50, 1, 0.5};
  Instance inst = gen_instance(cfg, 2000);
  CHECK(inst.graph.node_count() == 20);
  CHECK(inst.graph.edge_count() == 60);
  CHECK(verify_interval_connectivity(inst.graph, inst.schedule, 2000).ok);
  // Some churn actually happened.
  std::size_t with_absences = 0;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
    if (!inst.schedule.absences(e).empty()) ++with_absences;
  CHECK(with_absences > 0);
}

TEST_CASE("absence intervals avoid the tail of the horizon") {
  GenConfig cfg{15, 40, 25, 3, 1.0};
  const std::int64_t horizon = 400;
  Instance inst = gen_instance(cfg, horizon);
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
    for (const auto& iv : inst.schedule.absences(e))
      CHECK(iv.from < horizon - cfg.window);
}

TEST_CASE("generation is deterministic under the seed") {
  GenConfig cfg{18, 50, 12, 777, 0.4};
  CHECK(to_json(gen_instance(cfg, 500)) == to_json(gen_instance(cfg, 500)));
  GenConfig other = cfg;
  other.seed = 778;
  CHECK(to_json(gen_instance(cfg, 500)) != to_json(gen_instance(other, 500)));
  CHECK(to_json(gen_hard_instance(cfg, 96)) ==
        to_json(gen_hard_instance(cfg, 96)));
}

TEST_CASE("generated port labels are valid bijections") {
  // from_edges validates on construction; round-tripping re-validates.
  GenConfig cfg{12, 30, 8, 5, 0.7};
  Instance inst = gen_instance(cfg, 200);
  CHECK_NOTHROW(instance_from_json(to_json(inst)));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(gen_instance(GenConfig{2, 3, 1, 0, 0.0}, 10), Error);
  CHECK_THROWS_AS(gen_instance(GenConfig{5, 4, 1, 0, 0.0}, 10), Error);
  CHECK_THROWS_AS(gen_instance(GenConfig{5, 11, 1, 0, 0.0}, 10), Error);
  CHECK_THROWS_AS(gen_instance(GenConfig{5, 8, 0, 0, 0.0}, 10), Error);
  CHECK_THROWS_AS(gen_instance(GenConfig{5, 8, 2, 0, 1.5}, 10), Error);
}

TEST_CASE("rotating witness trees confirm the claimed window only") {
  // Two blocks on the complete four-node graph: connected at the block
  // length, refuted at the full horizon for a seed whose trees differ.
  GenConfig cfg{4, 6, 10, 11, 0.0};
  Instance inst = gen_hard_instance(cfg, 20);
  CHECK(verify_interval_connectivity(inst.graph, inst.schedule, 10).ok);
  CHECK_FALSE(verify_interval_connectivity(inst.graph, inst.schedule, 20).ok);
  CHECK(inst.schedule.claimed_window() == 10);
}

TEST_CASE("rotating trees keep every window of the claimed size connected") {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    GenConfig cfg;
    cfg.n = static_cast<std::uint32_t>(4 + rng.below(10));
    const std::uint64_t full =
        static_cast<std::uint64_t>(cfg.n) * (cfg.n - 1) / 2;
    cfg.m = cfg.n + rng.below(full - cfg.n + 1);
    cfg.window = 3 + static_cast<std::int64_t>(rng.below(12));
    cfg.seed = rng.next();
    Instance inst = gen_hard_instance(cfg, 10 * cfg.window);
    CHECK(verify_interval_connectivity(inst.graph, inst.schedule, cfg.window).ok);
  }
}

TEST_CASE("window at or above the horizon degenerates to one global tree") {
  GenConfig cfg{8, 14, 50, 9, 0.0};
  Instance inst = gen_hard_instance(cfg, 30);
  CHECK(verify_interval_connectivity(inst.graph, inst.schedule, 30).ok);
  // A single tree spans the whole horizon: at least n-1 edges never absent.
  std::size_t always_present = 0;
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
    if (inst.schedule.absences(e).empty()) ++always_present;
  CHECK(always_present >= 7);
}

TEST_CASE("one-hop explorer handles rotating trees at the window it needs") {
  GenConfig cfg{8, 14, 0, 21, 0.0};
  cfg.window = tau(8, 14, 16);
  const std::int64_t horizon = 4 * cfg.window;
  Instance inst = gen_hard_instance(cfg, horizon);
  GreedyExp1Agent agent;
  Trace t = run(inst.graph, inst.schedule, agent, {0, Model::Kt1, horizon - 1});
  CHECK(t.outcome == RunOutcome::Terminated);
  CHECK(t.visited_order.size() == 8);
}
