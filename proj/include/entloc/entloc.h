#ifndef ENTLOC_H
#define ENTLOC_H

#include <stddef.h>
#include <stdint.h>

/* C API for the entloc core.  All objects are opaque handles owned by the
 * library; every fallible call returns an entloc_status and reports results
 * through out-parameters.  On failure the thread-local message from
 * entloc_last_error() describes what went wrong.
 *
 * Qubit indexing is big-endian (qubit 0 = most significant amplitude bit);
 * all index lists taken by this API are 0-indexed. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entloc_status {
  ENTLOC_OK = 0,
  ENTLOC_ERR_NUMERIC = 1,    /* numerical failure                  */
  ENTLOC_ERR_VALIDATION = 2, /* bad arguments or malformed input   */
} entloc_status;

typedef struct entloc_state entloc_state;
typedef struct entloc_graph entloc_graph;
typedef struct entloc_table entloc_table;

const char* entloc_version(void);
int entloc_capacity(void);
/* Message from the most recent failing call on this thread ("" if none). */
const char* entloc_last_error(void);

/* ---- states ---------------------------------------------------------- */

/* JSON schema: {"n_qubits": n, "re": [...], "im": [...]}. */
entloc_status entloc_state_from_json(const char* json_text,
                                     entloc_state** out);
entloc_status entloc_state_from_json_file(const char* path,
                                          entloc_state** out);
/* Presets: "ghz", "w", "plus", "zeros", "line-graph" (path-graph state),
 * "haar" (seeded). */
entloc_status entloc_state_preset(const char* name, int n_qubits,
                                  uint64_t seed, entloc_state** out);
entloc_status entloc_state_to_json(const entloc_state* s, char** out_text);
int entloc_state_nqubits(const entloc_state* s);
void entloc_state_free(entloc_state* s);
void entloc_string_free(char* text);

/* ---- measures and bounds --------------------------------------------- */

/* kind: "ntangle" | "gme" | "ce" | "sqrtce".  s (length s_len, may be NULL
 * when unused) holds qubit labels for the concentratable kinds. */
entloc_status entloc_measure(const entloc_state* s, const char* kind,
                             const int* s_idx, size_t s_len, double* out);

/* Exact n-tangle MEA over measurements of the qubits in a. */
entloc_status entloc_mea_tau(const entloc_state* s, const int* a_idx,
                             size_t a_len, double* out);

/* Upper/lower bounds on the localizable measure when the qubits in a are
 * measured.  ntangle: ub = exact MEA, lb = 0.  gme: ub = marginal-purity
 * bound, lb = 0.  ce: ub = C(Psi; s), lb = squared correlation bound.
 * sqrtce: ub = sqrt(C(Psi; s)), lb = correlation bound. */
entloc_status entloc_bounds(const entloc_state* s, const int* a_idx,
                            size_t a_len, const char* kind, const int* s_idx,
                            size_t s_len, double* out_ub, double* out_lb);

typedef struct entloc_pso_config {
  int swarm_size;       /* <= 0 picks the default 50      */
  int iterations;       /* <= 0 picks the default 200     */
  double inertia;       /* < 0 picks the default 0.7298   */
  double cognitive;     /* < 0 picks the default 1.49618  */
  double social;        /* < 0 picks the default 1.49618  */
  int restarts;         /* <= 0 picks the default 3       */
  double velocity_clamp;/* <= 0 picks the default 0.5     */
  uint64_t seed;
  int threads;          /* <= 0 means 1                   */
} entloc_pso_config;

/* PSO estimate of the localizable measure.  out_params, when non-NULL, must
 * hold 2*a_len doubles and receives (theta, phi) per measured qubit. */
entloc_status entloc_lme(const entloc_state* s, const int* a_idx,
                         size_t a_len, const char* kind, const int* s_idx,
                         size_t s_len, const entloc_pso_config* cfg,
                         double* out_value, double* out_params);

/* ---- graphs ----------------------------------------------------------- */

/* File format: first line vertex count, then one "u v" edge per line. */
entloc_status entloc_graph_from_file(const char* path, entloc_graph** out);
entloc_status entloc_graph_from_edges(int n_vertices, const int* edges_uv,
                                      size_t n_edges, entloc_graph** out);
void entloc_graph_free(entloc_graph* g);

/* GF(2) solvability of the tau criterion for measuring the vertices in a.
 * out_solvable: 1 or 0.  out_x (length >= a_len, may be NULL) receives one
 * solution over the measured vertices in ascending order; *out_x_len is set
 * to a_len on solvable, 0 otherwise.  out_fast_path reports whether the
 * even-degree shortcut already decided the answer. */
entloc_status entloc_graph_check(const entloc_graph* g, const int* a_idx,
                                 size_t a_len, int* out_solvable, int* out_x,
                                 size_t* out_x_len, int* out_fast_path);

entloc_status entloc_graph_ce(const entloc_graph* g, const int* s_idx,
                              size_t s_len, double* out);

entloc_status entloc_graph_state(const entloc_graph* g, entloc_state** out);
entloc_status entloc_weighted_graph_state(const entloc_graph* g, double phase,
                                          entloc_state** out);
entloc_status entloc_weighted_trace_distance(const entloc_graph* g,
                                             double phi, double chi,
                                             double* out);
entloc_status entloc_ghz_extraction_probability(int n_pairs, double phi,
                                                double* out);
/* Rotated-X line protocol on 2*n_pairs+1 vertices: average (n_pairs+1)-tangle
 * over branches and the GHZ success probability. */
entloc_status entloc_line_protocol(int n_pairs, double phi, double* out_tau,
                                   double* out_p_ghz);

/* ---- sweeps ----------------------------------------------------------- */

typedef struct entloc_haar_sweep_config {
  int n_a;
  int n_b;
  int samples;
  const char* kind;
  const int* s_idx;   /* full-register labels for ce/sqrtce */
  size_t s_len;
  uint64_t seed;
  entloc_pso_config pso;
  int threads;
  int timings;        /* 0 writes 0.0 in the seconds column */
} entloc_haar_sweep_config;

entloc_status entloc_haar_sweep(const entloc_haar_sweep_config* cfg,
                                entloc_table** out);

typedef struct entloc_ising_sweep_config {
  int n;
  const int* a_idx;   /* measured sites, 0-indexed */
  size_t a_len;
  const double* j_over_h;
  size_t n_grid;
  double h_x;
  const int* ce_s_idx; /* s for the CE columns; NULL = all kept sites */
  size_t ce_s_len;
  entloc_pso_config pso;
  int threads;
} entloc_ising_sweep_config;

entloc_status entloc_ising_sweep(const entloc_ising_sweep_config* cfg,
                                 entloc_table** out);

size_t entloc_table_rows(const entloc_table* t);
size_t entloc_table_cols(const entloc_table* t);
const char* entloc_table_column(const entloc_table* t, size_t c);
double entloc_table_cell(const entloc_table* t, size_t r, size_t c);
void entloc_table_free(entloc_table* t);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTLOC_H */
