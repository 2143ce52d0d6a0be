#include "tgx/tgx.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "adversaries/clique.hpp"
#include "adversaries/kt0_time.hpp"
#include "adversaries/kt1_time.hpp"
#include "adversaries/window_dense.hpp"
#include "adversaries/window_sparse.hpp"
#include "agents/greedy_exp0.hpp"
#include "agents/greedy_exp1.hpp"
#include "agents/left_hand.hpp"
#include "connectivity.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "generator.hpp"
#include "instrument.hpp"
#include "json_io.hpp"
#include "window.hpp"

using namespace tgx;

struct tgx_instance {
  Instance inst;
};

struct tgx_trace {
  Trace trace;
};

namespace {

thread_local std::string g_last_error;

tgx_status to_status(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return TGX_ERR_INVALID_ARGUMENT;
    case Errc::Domain: return TGX_ERR_DOMAIN;
    case Errc::Range: return TGX_ERR_RANGE;
    case Errc::Parse: return TGX_ERR_PARSE;
    case Errc::Protocol: return TGX_ERR_PROTOCOL;
    case Errc::Model: return TGX_ERR_MODEL;
    case Errc::Io: return TGX_ERR_IO;
    case Errc::Internal: return TGX_ERR_INTERNAL;
  }
  return TGX_ERR_INTERNAL;
}

template <typename Fn>
tgx_status guarded(Fn&& fn) {
  try {
    fn();
    return TGX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TGX_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::unique_ptr<Agent> make_agent(tgx_algo algo, uint32_t c) {
  switch (algo) {
    case TGX_ALGO_GE0: return std::make_unique<GreedyExp0Agent>(c);
    case TGX_ALGO_GE1: return std::make_unique<GreedyExp1Agent>();
    case TGX_ALGO_LHR: return std::make_unique<LeftHandAgent>();
  }
  fail(Errc::InvalidArgument, "unknown algorithm");
}

void check_algo_model(tgx_algo algo, tgx_model model) {
  if (algo == TGX_ALGO_GE1 && model == TGX_MODEL_KT0)
    fail(Errc::Model, "the one-hop explorer requires the one-hop model");
}

void attach_instrumentation(Trace& trace, tgx_algo algo) {
  if (algo == TGX_ALGO_GE1 && trace.terminated())
    trace.instr = instrument_potential(trace);
}

}  // namespace

extern "C" {

const char* tgx_last_error(void) { return g_last_error.c_str(); }

const char* tgx_status_name(tgx_status s) {
  switch (s) {
    case TGX_OK: return "ok";
    case TGX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TGX_ERR_DOMAIN: return "domain error";
    case TGX_ERR_RANGE: return "range error";
    case TGX_ERR_PARSE: return "parse error";
    case TGX_ERR_PROTOCOL: return "protocol violation";
    case TGX_ERR_MODEL: return "model error";
    case TGX_ERR_IO: return "io error";
    case TGX_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void tgx_string_free(char* s) { std::free(s); }

tgx_status tgx_epsilon(uint64_t n, uint64_t m, double* out) {
  if (!out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = epsilon(n, m); });
}

tgx_status tgx_tau(uint64_t n, uint64_t m, uint32_t c, int64_t* out) {
  if (!out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = tau(n, m, c); });
}

tgx_status tgx_check_log_inequality(double x, uint64_t n, int* out_holds) {
  if (!out_holds) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out_holds = check_log_inequality(x, n) ? 1 : 0; });
}

tgx_status tgx_instance_from_json(const char* text, tgx_instance** out) {
  if (!text || !out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new tgx_instance{instance_from_json(text)}; });
}

tgx_status tgx_instance_to_json(const tgx_instance* inst, char** out_text) {
  if (!inst || !out_text) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out_text = dup_string(to_json(inst->inst)); });
}

tgx_status tgx_instance_load(const char* path, tgx_instance** out) {
  if (!path || !out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new tgx_instance{load_instance(path)}; });
}

tgx_status tgx_instance_save(const tgx_instance* inst, const char* path) {
  if (!inst || !path) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { save_instance(inst->inst, path); });
}

void tgx_instance_free(tgx_instance* inst) { delete inst; }

uint32_t tgx_instance_nodes(const tgx_instance* inst) {
  return inst->inst.graph.node_count();
}

uint64_t tgx_instance_edges(const tgx_instance* inst) {
  return inst->inst.graph.edge_count();
}

int64_t tgx_instance_horizon(const tgx_instance* inst) {
  return inst->inst.schedule.horizon();
}

int64_t tgx_instance_claimed_window(const tgx_instance* inst) {
  return inst->inst.schedule.claimed_window().value_or(-1);
}

int64_t tgx_instance_forbidden(const tgx_instance* inst) {
  return inst->inst.forbidden ? static_cast<int64_t>(*inst->inst.forbidden) : -1;
}

int64_t tgx_instance_guaranteed_steps(const tgx_instance* inst) {
  return inst->inst.guaranteed_steps.value_or(-1);
}

tgx_status tgx_gen_instance(uint32_t n, uint64_t m, int64_t T, uint64_t seed,
                            double churn, int64_t horizon, int hard,
                            tgx_instance** out) {
  if (!out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    GenConfig cfg{n, m, T, seed, churn};
    *out = new tgx_instance{hard ? gen_hard_instance(cfg, horizon)
                                 : gen_instance(cfg, horizon)};
  });
}

tgx_status tgx_verify_window(const tgx_instance* inst, int64_t T,
                             tgx_window_verdict* out) {
  if (!inst || !out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto v =
        verify_interval_connectivity(inst->inst.graph, inst->inst.schedule, T);
    out->ok = v.ok ? 1 : 0;
    out->first_violation = v.first_violation;
  });
}

tgx_status tgx_run_explorer(const tgx_instance* inst, tgx_algo algo,
                            tgx_model model, uint32_t start, uint32_t c,
                            int64_t max_steps, tgx_trace** out) {
  if (!inst || !out) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    check_algo_model(algo, model);
    auto agent = make_agent(algo, c);
    RunConfig cfg{start, model == TGX_MODEL_KT1 ? Model::Kt1 : Model::Kt0,
                  max_steps};
    Trace trace = run(inst->inst.graph, inst->inst.schedule, *agent, cfg);
    attach_instrumentation(trace, algo);
    *out = new tgx_trace{std::move(trace)};
  });
}

int64_t tgx_trace_steps(const tgx_trace* t) { return t->trace.moves; }

int tgx_trace_outcome(const tgx_trace* t) {
  switch (t->trace.outcome) {
    case RunOutcome::Terminated: return TGX_OUTCOME_TERMINATED;
    case RunOutcome::StepLimit: return TGX_OUTCOME_STEP_LIMIT;
    case RunOutcome::Stuck: return TGX_OUTCOME_STUCK;
    case RunOutcome::ProtocolViolation: return TGX_OUTCOME_PROTOCOL_VIOLATION;
  }
  return TGX_OUTCOME_STEP_LIMIT;
}

int64_t tgx_trace_visited(const tgx_trace* t) {
  return static_cast<int64_t>(t->trace.visited_order.size());
}

int64_t tgx_trace_sum_iota_v(const tgx_trace* t) {
  return t->trace.instr ? t->trace.instr->sum_iota_v() : 0;
}

int64_t tgx_trace_sum_iota_e(const tgx_trace* t) {
  return t->trace.instr ? t->trace.instr->sum_iota_e() : 0;
}

int64_t tgx_trace_redundant_moves(const tgx_trace* t) {
  return redundant_move_count(t->trace);
}

int64_t tgx_trace_first_visit(const tgx_trace* t, uint32_t node) {
  return t->trace.first_visit(node);
}

const char* tgx_trace_diagnostic(const tgx_trace* t) {
  return t->trace.diagnostic.c_str();
}

tgx_status tgx_trace_to_jsonl(const tgx_trace* t, char** out_text) {
  if (!t || !out_text) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out_text = dup_string(trace_to_jsonl(t->trace)); });
}

void tgx_trace_free(tgx_trace* t) { delete t; }

tgx_status tgx_run_adversary(tgx_attack attack, uint32_t param_n,
                             uint64_t param_m, double cprime, tgx_algo algo,
                             tgx_model model, uint32_t c, int64_t max_steps,
                             int32_t start, tgx_adv_report* report,
                             tgx_instance** out_realized,
                             tgx_trace** out_trace) {
  if (!report || !out_realized || !out_trace) return TGX_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    check_algo_model(algo, model);
    std::unique_ptr<Adversary> adv;
    NodeId default_start = 0;
    switch (attack) {
      case TGX_ATTACK_CLIQUE: {
        auto a = std::make_unique<CliqueAdversary>(param_n);
        default_start = a->default_start();
        adv = std::move(a);
        break;
      }
      case TGX_ATTACK_WINDOW_DENSE: {
        auto a = std::make_unique<WindowDenseAdversary>(param_n, param_m, cprime);
        default_start = a->default_start();
        adv = std::move(a);
        break;
      }
      case TGX_ATTACK_WINDOW_SPARSE: {
        auto a = std::make_unique<WindowSparseAdversary>(param_n, param_m);
        default_start = a->default_start();
        adv = std::move(a);
        break;
      }
      case TGX_ATTACK_KT1_TIME: {
        auto a = std::make_unique<Kt1TimeAdversary>(param_n, param_m);
        default_start = a->default_start();
        adv = std::move(a);
        break;
      }
      case TGX_ATTACK_KT0_TIME: {
        if (model != TGX_MODEL_KT0)
          fail(Errc::Model,
               "lazy port binding is unsound under the one-hop model");
        auto a = std::make_unique<Kt0TimeAdversary>(param_n, param_m);
        default_start = a->default_start();
        adv = std::move(a);
        break;
      }
      default:
        fail(Errc::InvalidArgument, "unknown attack");
    }

    auto agent = make_agent(algo, c);
    RunConfig cfg{start < 0 ? default_start : static_cast<NodeId>(start),
                  model == TGX_MODEL_KT1 ? Model::Kt1 : Model::Kt0, max_steps};
    Trace trace = run(*adv, *agent, cfg);

    const auto forbidden = adv->forbidden();
    report->guaranteed_steps = adv->guaranteed_steps();
    report->forbidden_count = static_cast<int32_t>(forbidden.size());
    for (std::size_t i = 0; i < forbidden.size() && i < 2; ++i)
      report->forbidden[i] = static_cast<int32_t>(forbidden[i]);
    report->steps_until_forbidden = -1;
    for (NodeId f : forbidden) {
      const int64_t t = trace.first_visit(f);
      if (t >= 0 && (report->steps_until_forbidden < 0 ||
                     t < report->steps_until_forbidden))
        report->steps_until_forbidden = t;
    }

    FixedSchedule realized = adv->realize();
    report->realized_horizon = realized.horizon();
    report->claimed_window = realized.claimed_window().value_or(-1);
    Instance dump{adv->realized_graph(), std::move(realized),
                  forbidden.empty() ? std::optional<NodeId>()
                                    : std::optional<NodeId>(forbidden.front()),
                  adv->guaranteed_steps()};
    *out_realized = new tgx_instance{std::move(dump)};
    *out_trace = new tgx_trace{std::move(trace)};
  });
}

}  // extern "C"
