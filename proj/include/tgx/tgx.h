/* tgx — deterministic exploration of interval-connected dynamic graphs.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every function returns a tgx_status, with results
 * passed through out-parameters. Handles are not thread-safe individually,
 * but distinct handles may be used from distinct threads freely.
 */
#ifndef TGX_H
#define TGX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tgx_status {
  TGX_OK = 0,
  TGX_ERR_INVALID_ARGUMENT = 1,
  TGX_ERR_DOMAIN = 2,
  TGX_ERR_RANGE = 3,
  TGX_ERR_PARSE = 4,
  TGX_ERR_PROTOCOL = 5,
  TGX_ERR_MODEL = 6,
  TGX_ERR_IO = 7,
  TGX_ERR_INTERNAL = 8
} tgx_status;

typedef enum tgx_model { TGX_MODEL_KT0 = 0, TGX_MODEL_KT1 = 1 } tgx_model;

typedef enum tgx_algo {
  TGX_ALGO_GE0 = 0, /* zero-hop greedy explorer */
  TGX_ALGO_GE1 = 1, /* one-hop greedy explorer */
  TGX_ALGO_LHR = 2  /* left-hand-rule baseline */
} tgx_algo;

typedef enum tgx_attack {
  TGX_ATTACK_CLIQUE = 0,
  TGX_ATTACK_WINDOW_DENSE = 1,
  TGX_ATTACK_WINDOW_SPARSE = 2,
  TGX_ATTACK_KT1_TIME = 3,
  TGX_ATTACK_KT0_TIME = 4
} tgx_attack;

typedef enum tgx_outcome {
  TGX_OUTCOME_TERMINATED = 0,
  TGX_OUTCOME_STEP_LIMIT = 1,
  TGX_OUTCOME_STUCK = 2,
  TGX_OUTCOME_PROTOCOL_VIOLATION = 3
} tgx_outcome;

typedef struct tgx_instance tgx_instance; /* graph + fixed schedule */
typedef struct tgx_trace tgx_trace;       /* one recorded run */

/* Human-readable message for the most recent error on this thread. */
const char* tgx_last_error(void);
const char* tgx_status_name(tgx_status s);

/* Heap strings returned by *_to_json / *_to_jsonl. */
void tgx_string_free(char* s);

/* ---- window arithmetic ---- */

tgx_status tgx_epsilon(uint64_t n, uint64_t m, double* out);
tgx_status tgx_tau(uint64_t n, uint64_t m, uint32_t c, int64_t* out);
tgx_status tgx_check_log_inequality(double x, uint64_t n, int* out_holds);

/* ---- instances ---- */

tgx_status tgx_instance_from_json(const char* text, tgx_instance** out);
tgx_status tgx_instance_to_json(const tgx_instance* inst, char** out_text);
tgx_status tgx_instance_load(const char* path, tgx_instance** out);
tgx_status tgx_instance_save(const tgx_instance* inst, const char* path);
void tgx_instance_free(tgx_instance* inst);

uint32_t tgx_instance_nodes(const tgx_instance* inst);
uint64_t tgx_instance_edges(const tgx_instance* inst);
int64_t tgx_instance_horizon(const tgx_instance* inst);
/* -1 when the instance claims no particular window size. */
int64_t tgx_instance_claimed_window(const tgx_instance* inst);
/* -1 when the instance carries no forbidden node / guarantee. */
int64_t tgx_instance_forbidden(const tgx_instance* inst);
int64_t tgx_instance_guaranteed_steps(const tgx_instance* inst);

/* ---- generation ---- */

tgx_status tgx_gen_instance(uint32_t n, uint64_t m, int64_t T, uint64_t seed,
                            double churn, int64_t horizon, int hard,
                            tgx_instance** out);

/* ---- connectivity oracle ---- */

typedef struct tgx_window_verdict {
  int ok;
  int64_t first_violation; /* window start; meaningful when !ok */
} tgx_window_verdict;

tgx_status tgx_verify_window(const tgx_instance* inst, int64_t T,
                             tgx_window_verdict* out);

/* ---- runs ---- */

tgx_status tgx_run_explorer(const tgx_instance* inst, tgx_algo algo,
                            tgx_model model, uint32_t start, uint32_t c,
                            int64_t max_steps, tgx_trace** out);

int64_t tgx_trace_steps(const tgx_trace* t);           /* moves made */
int tgx_trace_outcome(const tgx_trace* t);             /* tgx_outcome */
int64_t tgx_trace_visited(const tgx_trace* t);         /* distinct nodes */
int64_t tgx_trace_sum_iota_v(const tgx_trace* t);      /* 0 unless one-hop */
int64_t tgx_trace_sum_iota_e(const tgx_trace* t);      /* 0 unless one-hop */
int64_t tgx_trace_redundant_moves(const tgx_trace* t);
/* First time the node was occupied, or -1. */
int64_t tgx_trace_first_visit(const tgx_trace* t, uint32_t node);
const char* tgx_trace_diagnostic(const tgx_trace* t);
tgx_status tgx_trace_to_jsonl(const tgx_trace* t, char** out_text);
void tgx_trace_free(tgx_trace* t);

/* ---- adversary runs ---- */

typedef struct tgx_adv_report {
  int64_t guaranteed_steps;      /* -1: forbidden for the whole run */
  int64_t claimed_window;        /* window the realized dump satisfies */
  int64_t steps_until_forbidden; /* -1: never reached */
  int32_t forbidden[2];
  int32_t forbidden_count;
  int64_t realized_horizon;
} tgx_adv_report;

/* Runs the named construction against an agent. `start` of -1 uses the
 * construction's default start node. `cprime` only applies to the dense
 * window attack; `param_n` is the gadget size for the clique attack.
 * On success, *out_realized holds the realized fixed-schedule dump (with
 * forbidden node and guarantee attached) and *out_trace the run.
 */
tgx_status tgx_run_adversary(tgx_attack attack, uint32_t param_n,
                             uint64_t param_m, double cprime, tgx_algo algo,
                             tgx_model model, uint32_t c, int64_t max_steps,
                             int32_t start, tgx_adv_report* report,
                             tgx_instance** out_realized,
                             tgx_trace** out_trace);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TGX_H */
