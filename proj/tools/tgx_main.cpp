// Command-line front end for the tgx shared library: generate instances,
// run explorers over them, run the adversarial constructions, verify
// interval connectivity, and re-derive experiment summaries.
//
// Exit codes: 0 success, 1 claim violated, 2 usage or parse error.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tgx/tgx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(tgx_status s, const std::string& what) {
  if (s == TGX_OK) return;
  const bool usage = s == TGX_ERR_PARSE || s == TGX_ERR_IO ||
                     s == TGX_ERR_INVALID_ARGUMENT || s == TGX_ERR_MODEL ||
                     s == TGX_ERR_DOMAIN || s == TGX_ERR_RANGE;
  die(usage ? kExitUsage : kExitClaim,
      what + ": " + tgx_status_name(s) + " (" + tgx_last_error() + ")");
}

struct InstancePtr {
  tgx_instance* p = nullptr;
  InstancePtr() = default;
  InstancePtr(const InstancePtr&) = delete;
  InstancePtr& operator=(const InstancePtr&) = delete;
  ~InstancePtr() { tgx_instance_free(p); }
};

struct TracePtr {
  tgx_trace* p = nullptr;
  TracePtr() = default;
  TracePtr(const TracePtr&) = delete;
  TracePtr& operator=(const TracePtr&) = delete;
  ~TracePtr() { tgx_trace_free(p); }
};

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) die(kExitUsage, "cannot write " + tmp);
    out << content;
    if (!out) die(kExitUsage, "write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    die(kExitUsage, "rename failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitUsage, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tgx_algo parse_algo(const std::string& s) {
  if (s == "ge0") return TGX_ALGO_GE0;
  if (s == "ge1") return TGX_ALGO_GE1;
  if (s == "lhr") return TGX_ALGO_LHR;
  die(kExitUsage, "unknown algo: " + s);
}

tgx_model parse_model(const std::string& s) {
  if (s == "kt0") return TGX_MODEL_KT0;
  if (s == "kt1") return TGX_MODEL_KT1;
  die(kExitUsage, "unknown model: " + s);
}

tgx_attack parse_attack(const std::string& s) {
  if (s == "clique") return TGX_ATTACK_CLIQUE;
  if (s == "window-dense") return TGX_ATTACK_WINDOW_DENSE;
  if (s == "window-sparse") return TGX_ATTACK_WINDOW_SPARSE;
  if (s == "kt1-time") return TGX_ATTACK_KT1_TIME;
  if (s == "kt0-time") return TGX_ATTACK_KT0_TIME;
  die(kExitUsage, "unknown attack: " + s);
}

const char* outcome_name(int outcome) {
  switch (outcome) {
    case TGX_OUTCOME_TERMINATED: return "terminated";
    case TGX_OUTCOME_STEP_LIMIT: return "step_limit";
    case TGX_OUTCOME_STUCK: return "stuck";
    case TGX_OUTCOME_PROTOCOL_VIOLATION: return "protocol_violation";
  }
  return "unknown";
}

constexpr const char* kCsvHeader =
    "n,m,c,algo,model,steps,terminated,visited,sum_iota_v,sum_iota_e,"
    "redundant_moves,tau,bound_ratio,run,seed,T,churn,start,max_steps,horizon,"
    "outcome,graph_file,trace_file";

struct RunParams {
  uint32_t n = 0;
  uint64_t m = 0;
  uint32_t c = 16;
  std::string algo = "ge1";
  std::string model = "kt1";
  int64_t T = 0;
  uint64_t seed = 0;
  double churn = 0.0;
  uint32_t start = 0;
  int64_t max_steps = 0;
  int64_t horizon = 0;
};

std::string run_to_csv_row(const RunParams& p, int run_index,
                           const tgx_trace* trace,
                           const std::string& graph_file,
                           const std::string& trace_file) {
  int64_t tau_v = 0;
  check(tgx_tau(p.n, p.m, p.c, &tau_v), "tau");
  const int64_t steps = tgx_trace_steps(trace);
  const int outcome = tgx_trace_outcome(trace);
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f",
                static_cast<double>(steps) / static_cast<double>(tau_v));
  std::ostringstream row;
  row << p.n << ',' << p.m << ',' << p.c << ',' << p.algo << ',' << p.model
      << ',' << steps << ','
      << (outcome == TGX_OUTCOME_TERMINATED ? "true" : "false") << ','
      << tgx_trace_visited(trace) << ',' << tgx_trace_sum_iota_v(trace) << ','
      << tgx_trace_sum_iota_e(trace) << ',' << tgx_trace_redundant_moves(trace)
      << ',' << tau_v << ',' << ratio << ',' << run_index << ',' << p.seed
      << ',' << p.T << ',' << p.churn << ',' << p.start << ',' << p.max_steps
      << ',' << p.horizon << ',' << outcome_name(outcome) << ',' << graph_file
      << ',' << trace_file;
  return row.str();
}

int cmd_gen(uint32_t n, uint64_t m, int64_t T, uint64_t seed, double churn,
            int64_t horizon, bool hard, const std::string& out) {
  InstancePtr inst;
  check(tgx_gen_instance(n, m, T, seed, churn, horizon, hard ? 1 : 0, &inst.p),
        "generate");
  char* text = nullptr;
  check(tgx_instance_to_json(inst.p, &text), "serialize");
  write_file_atomic(out, std::string(text) + "\n");
  tgx_string_free(text);
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

struct RunResult {
  std::string row;
  int outcome = TGX_OUTCOME_STEP_LIMIT;
  int64_t visited = 0;
};

int cmd_explore(RunParams base, int reps, int jobs,
                const std::string& out_dir) {
  if (base.algo == "ge1" && base.model == "kt0")
    die(kExitUsage, "the one-hop explorer needs --model kt1");
  if (reps < 1) die(kExitUsage, "--reps must be positive");
  if (base.T == 0) check(tgx_tau(base.n, base.m, base.c, &base.T), "tau");
  if (base.max_steps == 0) {
    int64_t tau_v = 0;
    check(tgx_tau(base.n, base.m, base.c, &tau_v), "tau");
    base.max_steps = 4 * tau_v;
  }
  if (base.horizon == 0) base.horizon = base.max_steps + 1;

  std::vector<RunResult> results(reps);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= reps || failed.load()) return;
      try {
        RunParams p = base;
        p.seed = base.seed + static_cast<uint64_t>(i);
        char idx[16];
        std::snprintf(idx, sizeof idx, "%04d", i);
        const std::string graph_file =
            out_dir + "/run_" + idx + ".graph.json";
        const std::string trace_file =
            out_dir + "/run_" + idx + ".trace.jsonl";

        InstancePtr inst;
        check(tgx_gen_instance(p.n, p.m, p.T, p.seed, p.churn, p.horizon, 0,
                               &inst.p),
              "generate");
        char* text = nullptr;
        check(tgx_instance_to_json(inst.p, &text), "serialize");
        write_file_atomic(graph_file, std::string(text) + "\n");
        tgx_string_free(text);

        TracePtr trace;
        check(tgx_run_explorer(inst.p, parse_algo(p.algo),
                               parse_model(p.model), p.start, p.c,
                               p.max_steps, &trace.p),
              "run");
        char* jsonl = nullptr;
        check(tgx_trace_to_jsonl(trace.p, &jsonl), "trace export");
        write_file_atomic(trace_file, jsonl);
        tgx_string_free(jsonl);

        results[i].row = run_to_csv_row(p, i, trace.p, graph_file, trace_file);
        results[i].outcome = tgx_trace_outcome(trace.p);
        results[i].visited = tgx_trace_visited(trace.p);
      } catch (const CliError& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failed = true;
        failure = e.message;
        return;
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed) die(kExitUsage, failure);

  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  bool all_explored = true;
  for (const auto& r : results) {
    csv << r.row << "\n";
    if (r.outcome != TGX_OUTCOME_TERMINATED ||
        r.visited != static_cast<int64_t>(base.n))
      all_explored = false;
  }
  write_file_atomic(out_dir + "/summary.csv", csv.str());
  std::cout << "wrote " << out_dir << "/summary.csv (" << reps << " runs)\n";
  if (!all_explored) {
    std::cerr << "claim violated: not every run explored all nodes\n";
    return kExitClaim;
  }
  return kExitOk;
}

int cmd_adversary(const std::string& attack, uint32_t n, uint64_t m,
                  double cprime, const std::string& algo,
                  const std::string& model, uint32_t c, int64_t max_steps,
                  int32_t start, const std::string& out_dir) {
  if (algo == "ge1" && model == "kt0")
    die(kExitUsage, "the one-hop explorer needs --model kt1");
  tgx_adv_report report{};
  InstancePtr realized;
  TracePtr trace;
  check(tgx_run_adversary(parse_attack(attack), n, m, cprime,
                          parse_algo(algo), parse_model(model), c, max_steps,
                          start, &report, &realized.p, &trace.p),
        "adversary run");

  char* text = nullptr;
  check(tgx_instance_to_json(realized.p, &text), "serialize");
  write_file_atomic(out_dir + "/realized.json", std::string(text) + "\n");
  tgx_string_free(text);
  char* jsonl = nullptr;
  check(tgx_trace_to_jsonl(trace.p, &jsonl), "trace export");
  write_file_atomic(out_dir + "/trace.jsonl", jsonl);
  tgx_string_free(jsonl);

  bool oracle_ok = true;
  const int64_t T = report.claimed_window > 0 ? report.claimed_window
                                              : report.realized_horizon;
  if (report.realized_horizon > 0 && T > 0) {
    tgx_window_verdict verdict{};
    check(tgx_verify_window(realized.p, T, &verdict), "oracle");
    oracle_ok = verdict.ok != 0;
  }

  const bool reached = report.steps_until_forbidden >= 0;
  std::ostringstream verdict;
  verdict << "{\"forbidden_reached\":" << (reached ? "true" : "false")
          << ",\"steps_until_forbidden\":";
  if (reached)
    verdict << report.steps_until_forbidden;
  else
    verdict << "null";
  verdict << ",\"guaranteed\":" << report.guaranteed_steps
          << ",\"oracle_T_ok\":" << (oracle_ok ? "true" : "false") << "}";
  std::cout << verdict.str() << "\n";
  write_file_atomic(out_dir + "/verdict.json", verdict.str() + "\n");

  const bool too_early =
      reached && (report.guaranteed_steps < 0 ||
                  report.steps_until_forbidden < report.guaranteed_steps);
  if (too_early || !oracle_ok) return kExitClaim;
  return kExitOk;
}

int cmd_verify(const std::string& path, int64_t T) {
  InstancePtr inst;
  check(tgx_instance_load(path.c_str(), &inst.p), "load");
  tgx_window_verdict verdict{};
  check(tgx_verify_window(inst.p, T, &verdict), "verify");
  if (verdict.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  std::cout << "violation at window [" << verdict.first_violation << ".."
            << (verdict.first_violation + T - 1) << "]\n";
  return kExitClaim;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int cmd_replay(const std::string& dir) {
  std::ifstream csv(dir + "/summary.csv");
  if (!csv) die(kExitUsage, "cannot open " + dir + "/summary.csv");
  std::string header;
  std::getline(csv, header);
  if (header != kCsvHeader) die(kExitUsage, "unexpected summary schema");

  int checked = 0;
  std::string line;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 23) die(kExitUsage, "malformed summary row");
    RunParams p;
    p.n = static_cast<uint32_t>(std::stoul(f[0]));
    p.m = std::stoull(f[1]);
    p.c = static_cast<uint32_t>(std::stoul(f[2]));
    p.algo = f[3];
    p.model = f[4];
    p.seed = std::stoull(f[14]);
    p.T = std::stoll(f[15]);
    p.churn = std::stod(f[16]);
    p.start = static_cast<uint32_t>(std::stoul(f[17]));
    p.max_steps = std::stoll(f[18]);
    p.horizon = std::stoll(f[19]);
    const int run_index = std::stoi(f[13]);
    const std::string graph_file = f[21];
    const std::string trace_file = f[22];

    InstancePtr inst;
    check(tgx_instance_load(graph_file.c_str(), &inst.p),
          "load " + graph_file);
    TracePtr trace;
    check(tgx_run_explorer(inst.p, parse_algo(p.algo), parse_model(p.model),
                           p.start, p.c, p.max_steps, &trace.p),
          "re-run");
    char* jsonl = nullptr;
    check(tgx_trace_to_jsonl(trace.p, &jsonl), "trace export");
    const std::string regenerated(jsonl);
    tgx_string_free(jsonl);
    if (regenerated != read_file(trace_file)) {
      std::cerr << "trace mismatch for run " << run_index << "\n";
      return kExitClaim;
    }
    const std::string row =
        run_to_csv_row(p, run_index, trace.p, graph_file, trace_file);
    if (row != line) {
      std::cerr << "summary mismatch for run " << run_index << "\n"
                << "  stored:     " << line << "\n"
                << "  recomputed: " << row << "\n";
      return kExitClaim;
    }
    ++checked;
  }
  std::cout << "replayed " << checked << " runs, all consistent\n";
  return kExitOk;
}

int cmd_bench(uint32_t n, uint64_t m, int reps) {
  int64_t tau_v = 0;
  check(tgx_tau(n, m, 16, &tau_v), "tau");
  const int64_t max_steps = 4 * tau_v;
  const auto t0 = std::chrono::steady_clock::now();
  int64_t total_steps = 0;
  for (int i = 0; i < reps; ++i) {
    InstancePtr inst;
    check(tgx_gen_instance(n, m, tau_v, 1000 + i, 0.3, max_steps + 1, 0,
                           &inst.p),
          "generate");
    for (tgx_algo algo : {TGX_ALGO_GE1, TGX_ALGO_GE0}) {
      TracePtr trace;
      check(tgx_run_explorer(
                inst.p, algo,
                algo == TGX_ALGO_GE1 ? TGX_MODEL_KT1 : TGX_MODEL_KT0, 0, 16,
                max_steps, &trace.p),
            "run");
      total_steps += tgx_trace_steps(trace.p);
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  std::cout << "bench: n=" << n << " m=" << m << " reps=" << reps
            << " steps=" << total_steps << " wall=" << secs << "s steps/s="
            << (secs > 0 ? static_cast<double>(total_steps) / secs : 0.0)
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simulation lab for exploring interval-connected dynamic graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a windowed instance");
  uint32_t g_n = 20;
  uint64_t g_m = 40;
  int64_t g_T = 10;
  uint64_t g_seed = 0;
  double g_churn = 0.3;
  int64_t g_horizon = 1000;
  bool g_hard = false;
  std::string g_out = "instance.json";
  gen->add_option("--n", g_n, "node count");
  gen->add_option("--m", g_m, "edge count");
  gen->add_option("--T", g_T, "target window size");
  gen->add_option("--seed", g_seed, "random seed");
  gen->add_option("--churn", g_churn,
                  "per-edge per-window absence probability");
  gen->add_option("--horizon", g_horizon, "schedule horizon");
  gen->add_flag("--hard", g_hard, "rotate the witness tree every T steps");
  gen->add_option("--out", g_out, "output file");

  auto* explore = app.add_subcommand("explore", "run an explorer over a grid");
  RunParams e;
  e.n = 20;
  e.m = 40;
  int e_reps = 1;
  int e_jobs = 1;
  std::string e_out = "out";
  explore->add_option("--n", e.n, "node count");
  explore->add_option("--m", e.m, "edge count");
  explore->add_option("--T", e.T, "window size (default tau(n,m,c))");
  explore->add_option("--c", e.c, "window constant");
  explore->add_option("--seed", e.seed, "seed base; run i uses seed+i");
  explore->add_option("--reps", e_reps, "number of runs");
  explore->add_option("--model", e.model, "kt0 or kt1");
  explore->add_option("--algo", e.algo, "ge0, ge1, or lhr");
  explore->add_option("--churn", e.churn, "absence probability");
  explore->add_option("--start", e.start, "start node");
  explore->add_option("--max-steps", e.max_steps, "step limit (default 4*tau)");
  explore->add_option("--horizon", e.horizon,
                      "schedule horizon (default max-steps+1)");
  explore->add_option("--out", e_out, "output directory (must exist)");
  explore->add_option("--jobs", e_jobs, "concurrent runs");

  auto* adversary =
      app.add_subcommand("adversary", "run an adversarial construction");
  std::string a_attack = "clique";
  uint32_t a_n = 10;
  uint64_t a_m = 0;
  double a_cprime = 1.0 / 32.0;
  std::string a_algo = "ge1";
  std::string a_model = "kt1";
  uint32_t a_c = 16;
  int64_t a_max_steps = 10000;
  int32_t a_start = -1;
  std::string a_out = "out";
  adversary->add_option(
      "--attack", a_attack,
      "clique, window-dense, window-sparse, kt1-time, kt0-time");
  adversary->add_option("--n", a_n, "node count (gadget size for clique)");
  adversary->add_option("--m", a_m, "edge count");
  adversary->add_option("--cprime", a_cprime, "window-dense constant");
  adversary->add_option("--algo", a_algo, "agent under attack");
  adversary->add_option("--model", a_model, "kt0 or kt1");
  adversary->add_option("--c", a_c, "window constant for ge0");
  adversary->add_option("--max-steps", a_max_steps, "step limit");
  adversary->add_option("--start", a_start, "start node (-1: default)");
  adversary->add_option("--out", a_out, "output directory (must exist)");

  auto* verify = app.add_subcommand("verify", "check interval connectivity");
  std::string v_path;
  int64_t v_T = 1;
  verify->add_option("path", v_path, "instance file")->required();
  verify->add_option("--T", v_T, "window size")->required();

  auto* replay =
      app.add_subcommand("replay", "re-derive a summary from its artifacts");
  std::string r_dir = "out";
  replay->add_option("--dir", r_dir, "directory holding summary.csv");

  auto* bench = app.add_subcommand("bench", "rough throughput measurement");
  uint32_t b_n = 30;
  uint64_t b_m = 120;
  int b_reps = 5;
  bench->add_option("--n", b_n, "node count");
  bench->add_option("--m", b_m, "edge count");
  bench->add_option("--reps", b_reps, "instances per measurement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(g_n, g_m, g_T, g_seed, g_churn, g_horizon, g_hard, g_out);
    if (explore->parsed()) return cmd_explore(e, e_reps, e_jobs, e_out);
    if (adversary->parsed())
      return cmd_adversary(a_attack, a_n, a_m, a_cprime, a_algo, a_model, a_c,
                           a_max_steps, a_start, a_out);
    if (verify->parsed()) return cmd_verify(v_path, v_T);
    if (replay->parsed()) return cmd_replay(r_dir);
    if (bench->parsed()) return cmd_bench(b_n, b_m, b_reps);
  } catch (const CliError& err) {
    std::cerr << "error: " << err.message << "\n";
    return err.code;
  }
  return kExitUsage;
}
