#include "engine.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace tgx {

namespace {

// Uniform step environment over fixed schedules and adaptive adversaries.
class StepEnv {
 public:
  virtual ~StepEnv() = default;
  virtual const PortGraph& graph() const = 0;
  virtual void begin_step(std::int64_t t, NodeId at) = 0;
  virtual std::vector<Port> available_ports(NodeId at) const = 0;
  virtual NodeId resolve_move(NodeId at, Port p) = 0;
  virtual Port arrival_port(NodeId at, NodeId from) = 0;
  virtual void after_move(std::int64_t t, NodeId from, Port via, NodeId to) {}
  virtual bool supports_kt1() const = 0;
  virtual bool present_now(EdgeId e) const = 0;
};

class FixedEnv final : public StepEnv {
 public:
  FixedEnv(const PortGraph& g, const FixedSchedule& s) : g_(g), s_(s) {}
  const PortGraph& graph() const override { return g_; }
  void begin_step(std::int64_t t, NodeId) override { t_ = t; }
  std::vector<Port> available_ports(NodeId at) const override {
    std::vector<Port> out;
    for (const auto& inc : g_.incident(at))
      if (s_.present(inc.edge, t_)) out.push_back(inc.port);
    return out;
  }
  NodeId resolve_move(NodeId at, Port p) override { return g_.neighbor_at(at, p); }
  Port arrival_port(NodeId at, NodeId from) override { return g_.port_to(at, from); }
  bool supports_kt1() const override { return true; }
  bool present_now(EdgeId e) const override { return s_.present(e, t_); }

 private:
  const PortGraph& g_;
  const FixedSchedule& s_;
  std::int64_t t_ = 0;
};

class AdaptiveEnv final : public StepEnv {
 public:
  explicit AdaptiveEnv(Adversary& adv) : adv_(adv) {}
  const PortGraph& graph() const override { return adv_.graph(); }
  void begin_step(std::int64_t t, NodeId at) override { adv_.begin_step(t, at); }
  std::vector<Port> available_ports(NodeId at) const override {
    return adv_.available_ports(at);
  }
  NodeId resolve_move(NodeId at, Port p) override {
    return adv_.resolve_move(at, p);
  }
  Port arrival_port(NodeId at, NodeId from) override {
    return adv_.arrival_port(at, from);
  }
  void after_move(std::int64_t t, NodeId from, Port via, NodeId to) override {
    adv_.after_move(t, from, via, to);
  }
  bool supports_kt1() const override { return adv_.supports_kt1(); }
  bool present_now(EdgeId e) const override { return adv_.present(e); }

 private:
  Adversary& adv_;
};

Observation make_observation(StepEnv& env, std::int64_t t, NodeId current,
                             std::optional<Port> incoming, Model model) {
  Observation obs;
  obs.t = t;
  obs.node = current;
  obs.degree = env.graph().degree(current);
  obs.available = env.available_ports(current);
  std::sort(obs.available.begin(), obs.available.end());
  obs.incoming = incoming;
  if (model == Model::Kt1) {
    std::vector<std::pair<NodeId, Port>> view;
    for (Port p : obs.available)
      view.emplace_back(env.graph().neighbor_at(current, p), p);
    obs.view = std::move(view);
  }
  return obs;
}

Trace run_impl(StepEnv& env, Agent& agent, const RunConfig& cfg) {
  const PortGraph& g = env.graph();
  if (cfg.start >= g.node_count()) fail(Errc::Range, "start node out of range");
  if (cfg.max_steps < 0) fail(Errc::InvalidArgument, "max_steps must be >= 0");
  if (cfg.model == Model::Kt1 && !env.supports_kt1())
    fail(Errc::Model, "this schedule cannot serve one-hop views");

  Trace trace;
  std::set<NodeId> visited;
  NodeId current = cfg.start;
  std::optional<Port> pending_incoming;

  for (std::int64_t t = 0; t < cfg.max_steps; ++t) {
    env.begin_step(t, current);
    // p_in is defined by the traversed edge, not by current presence; it is
    // resolved at arrival (the previous iteration) and reported here as-is.
    Observation obs = make_observation(env, t, current, pending_incoming, cfg.model);

    TraceStep step;
    step.t = t;
    step.node = current;
    step.new_visit = visited.insert(current).second;
    if (step.new_visit) trace.visited_order.push_back(current);
    step.obs = obs;

    AgentAction action;
    try {
      action = agent.step(obs);
    } catch (const StuckError& e) {
      trace.outcome = RunOutcome::Stuck;
      trace.diagnostic = e.what();
      step.move_port.reset();
      trace.steps.push_back(std::move(step));
      break;
    }

    if (action.kind == AgentAction::Kind::Terminate) {
      trace.outcome = RunOutcome::Terminated;
      step.move_port.reset();
      trace.steps.push_back(std::move(step));
      break;
    }

    if (!std::binary_search(obs.available.begin(), obs.available.end(),
                            action.port)) {
      trace.outcome = RunOutcome::ProtocolViolation;
      trace.diagnostic = "agent selected unavailable port " +
                         std::to_string(action.port) + " at node " +
                         std::to_string(current) + ", time " + std::to_string(t);
      step.move_port.reset();
      trace.steps.push_back(std::move(step));
      break;
    }

    const NodeId next = env.resolve_move(current, action.port);
    env.after_move(t, current, action.port, next);
    step.move_port = action.port;
    trace.steps.push_back(std::move(step));
    ++trace.moves;

    pending_incoming = env.arrival_port(next, current);
    current = next;
    trace.outcome = RunOutcome::StepLimit;
  }

  trace.round_marks = agent.round_marks();
  return trace;
}

}  // namespace

Observation build_observation(const PortGraph& g, const FixedSchedule& s,
                              std::int64_t t, NodeId current,
                              std::optional<NodeId> previous, Model model) {
  FixedEnv env(g, s);
  env.begin_step(t, current);
  std::optional<Port> incoming;
  if (previous) incoming = g.port_to(current, *previous);
  return make_observation(env, t, current, incoming, model);
}

Trace run(const PortGraph& g, const FixedSchedule& s, Agent& agent,
          const RunConfig& cfg) {
  FixedEnv env(g, s);
  return run_impl(env, agent, cfg);
}

Trace run(Adversary& adv, Agent& agent, const RunConfig& cfg) {
  AdaptiveEnv env(adv);
  return run_impl(env, agent, cfg);
}

}  // namespace tgx
