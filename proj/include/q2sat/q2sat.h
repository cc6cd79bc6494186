// Copyright 2026 The q2sat-adiabatic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the q2sat adiabatic toolkit.
 *
 * Every function returns a q2s_status. On failure a thread-local message is
 * available from q2s_last_error() until the next call on the same thread.
 * Objects are opaque handles released with their *_free function; strings
 * returned through char** are released with q2s_string_free. Output
 * handles are set to NULL on failure. */

#ifndef Q2SAT_Q2SAT_H
#define Q2SAT_Q2SAT_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(Q2SAT_BUILDING_C_API)
#    define Q2S_API __declspec(dllexport)
#  else
#    define Q2S_API __declspec(dllimport)
#  endif
#else
#  define Q2S_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum q2s_status {
  Q2S_OK = 0,
  Q2S_ERR_INVALID_ARGUMENT = 1,
  Q2S_ERR_PARSE = 2,
  Q2S_ERR_IO = 3,
  Q2S_ERR_NUMERICAL = 4,
  Q2S_ERR_INTERNAL = 5
} q2s_status;

typedef struct q2s_instance q2s_instance;
typedef struct q2s_spectrum q2s_spectrum;
typedef struct q2s_evolution q2s_evolution;
typedef struct q2s_holonomy q2s_holonomy;

Q2S_API const char* q2s_version(void);
Q2S_API const char* q2s_last_error(void);
Q2S_API const char* q2s_status_name(q2s_status status);
Q2S_API void q2s_string_free(char* text);

/* ---------------------------------------------------------------- instances */

typedef struct q2s_clause {
  double beta_re;
  double beta_im;
  double delta;
} q2s_clause;

/* beta = 1/sqrt(2), delta = 1. */
Q2S_API void q2s_clause_default(q2s_clause* clause);

Q2S_API q2s_status q2s_instance_generate(int n, double d, const q2s_clause* clause,
                                         uint64_t seed, q2s_instance** out);
/* edges holds m pairs (a, b) with a < b. */
Q2S_API q2s_status q2s_instance_create(int n, const int* edges, int m,
                                       const q2s_clause* clause, uint64_t seed,
                                       double density, q2s_instance** out);
Q2S_API q2s_status q2s_instance_read(const char* path, q2s_instance** out);
Q2S_API q2s_status q2s_instance_write(const q2s_instance* inst, const char* path);
Q2S_API q2s_status q2s_instance_to_json(const q2s_instance* inst, char** out);

typedef struct q2s_instance_info {
  int n;
  int m;
  uint64_t seed;
  double density;
  q2s_clause clause;
  int components;
} q2s_instance_info;

Q2S_API q2s_status q2s_instance_info_get(const q2s_instance* inst, q2s_instance_info* info);
Q2S_API q2s_status q2s_instance_edge(const q2s_instance* inst, int index, int* a, int* b);
Q2S_API void q2s_instance_free(q2s_instance* inst);

/* ----------------------------------------------------------------- spectrum */

typedef struct q2s_spectrum_options {
  double degeneracy_tol;
  double residual_tol;
  int block_size;
  int max_subspace;
  int max_restarts;
  int parallelism;
  /* Non-zero selects full dense diagonalization (n <= 12). */
  int dense;
  /* Non-zero keeps the ground basis (needed for evolve and holonomy). */
  int keep_basis;
  uint64_t seed;
} q2s_spectrum_options;

Q2S_API void q2s_spectrum_options_init(q2s_spectrum_options* options);
Q2S_API q2s_status q2s_spectrum_compute(const q2s_instance* inst,
                                        const q2s_spectrum_options* options,
                                        q2s_spectrum** out);

typedef struct q2s_spectrum_summary {
  double ground_energy;
  int has_gap;
  double gap_delta;
  uint64_t degeneracy;
  int ambiguous;
  /* 0 dense, 1 iterative. */
  int method;
  double max_residual;
  int components;
  int sectors_solved;
  double wall_time_ms;
} q2s_spectrum_summary;

Q2S_API q2s_status q2s_spectrum_summary_get(const q2s_spectrum* spec, q2s_spectrum_summary* out);
Q2S_API q2s_status q2s_spectrum_report_json(const q2s_spectrum* spec, int include_timing,
                                            char** out);
Q2S_API void q2s_spectrum_free(q2s_spectrum* spec);

/* ---------------------------------------------------------------- evolution */

typedef enum q2s_frame { Q2S_FRAME_LAB = 0, Q2S_FRAME_ROTATING = 1 } q2s_frame;

typedef struct q2s_evolve_options {
  /* T = multiplier * pi / (50 gap^2) unless total_time > 0. */
  double multiplier;
  double total_time;
  double axis[3];
  int direction;
  /* 0 selects the default step rule. */
  int64_t steps;
  int enforce_step_rule;
  int checkpoints;
  double max_norm_drift;
  q2s_frame frame;
  /* Initial computational basis state (default 0, i.e. |0...0>). */
  uint64_t initial_index;
} q2s_evolve_options;

Q2S_API void q2s_evolve_options_init(q2s_evolve_options* options);
/* The spectrum must have been computed with keep_basis. */
Q2S_API q2s_status q2s_evolve(const q2s_instance* inst, const q2s_spectrum* spec,
                              const q2s_evolve_options* options, q2s_evolution** out);

typedef struct q2s_evolution_summary {
  double total_time;
  int64_t steps;
  q2s_frame frame;
  double ground_fidelity;
  double trivial_probability;
  double norm_drift;
  uint64_t degeneracy;
  double wall_time_ms;
} q2s_evolution_summary;

Q2S_API q2s_status q2s_evolution_summary_get(const q2s_evolution* ev, q2s_evolution_summary* out);
Q2S_API q2s_status q2s_evolution_report_json(const q2s_evolution* ev, int include_timing,
                                             char** out);
Q2S_API q2s_status q2s_evolution_checkpoints_csv(const q2s_evolution* ev, char** out);
/* |<a|b>|^2 of the two final states. */
Q2S_API q2s_status q2s_evolution_fidelity(const q2s_evolution* a, const q2s_evolution* b,
                                          double* out);
Q2S_API void q2s_evolution_free(q2s_evolution* ev);

/* ----------------------------------------------------------------- holonomy */

typedef enum q2s_gauge_convention {
  Q2S_GAUGE_STANDARD = 0,
  Q2S_GAUGE_REVERSED = 1
} q2s_gauge_convention;

typedef struct q2s_holonomy_options {
  double total_time;
  double axis[3];
  int direction;
  q2s_gauge_convention convention;
  int path_steps;
  /* -1 skips the cross-check, otherwise a q2s_frame. */
  int cross_check_frame;
  int64_t steps;
  uint64_t initial_index;
} q2s_holonomy_options;

Q2S_API void q2s_holonomy_options_init(q2s_holonomy_options* options);
Q2S_API q2s_status q2s_holonomy_compute(const q2s_instance* inst, const q2s_spectrum* spec,
                                        const q2s_holonomy_options* options,
                                        q2s_holonomy** out);

typedef struct q2s_holonomy_summary {
  uint64_t g;
  double unitarity_error;
  int has_fidelity;
  double fidelity_vs_evolution;
  double predicted_trivial_probability;
} q2s_holonomy_summary;

Q2S_API q2s_status q2s_holonomy_summary_get(const q2s_holonomy* hol, q2s_holonomy_summary* out);
Q2S_API q2s_status q2s_holonomy_report_json(const q2s_holonomy* hol, char** out);
Q2S_API void q2s_holonomy_free(q2s_holonomy* hol);

/* --------------------------------------------------------------- pipelines */

/* One-magnon gap table as CSV; *exponent (optional) receives the log-log
 * slope of gap against n over all rows of the first beta. */
Q2S_API q2s_status q2s_chain_table(const int* lengths, int n_lengths, const double* betas,
                                   int n_betas, int periodic, double delta, char** csv,
                                   double* exponent);

typedef struct q2s_scaling_config {
  const int* n_values;
  /* One sample count per n; NULL selects the defaults (see full). */
  const int* samples;
  int count;
  int full;
  double d;
  q2s_clause clause;
  uint64_t base_seed;
  int parallelism;
  double min_gap;
} q2s_scaling_config;

typedef struct q2s_scaling_fit {
  int has_fit;
  double slope;
  double intercept;
  double correlation_r;
  int samples;
  int exclusions;
} q2s_scaling_fit;

Q2S_API void q2s_scaling_config_init(q2s_scaling_config* config);
/* Writes scaling.csv, scaling_fit.json and scaling.dat into out_dir. */
Q2S_API q2s_status q2s_run_scaling(const q2s_scaling_config* config, const char* out_dir,
                                   q2s_scaling_fit* fit);

typedef struct q2s_histogram_config {
  int n;
  int samples;
  double d;
  q2s_clause clause;
  uint64_t base_seed;
  int parallelism;
  double bin_width;
  double min_gap;
} q2s_histogram_config;

typedef struct q2s_histogram_summary {
  uint64_t count;
  uint64_t excluded;
  double mean;
  double median;
  double modal_lo;
  double modal_hi;
  uint64_t modal_count;
  int right_skewed;
} q2s_histogram_summary;

Q2S_API void q2s_histogram_config_init(q2s_histogram_config* config);
/* Writes hist_nXX.csv, hist_nXX.json and hist_nXX.dat into out_dir. */
Q2S_API q2s_status q2s_run_histogram(const q2s_histogram_config* config, const char* out_dir,
                                     q2s_histogram_summary* summary);

typedef struct q2s_sweep_config {
  const int* n_values;
  int count;
  int samples;
  double d;
  double multiplier;
  q2s_clause clause;
  uint64_t base_seed;
  int parallelism;
  int max_n;
  q2s_frame frame;
  double fidelity_threshold;
  double trivial_threshold;
} q2s_sweep_config;

typedef struct q2s_sweep_totals {
  int count;
  int passing;
  double pass_fraction;
} q2s_sweep_totals;

Q2S_API void q2s_sweep_config_init(q2s_sweep_config* config);
/* Writes dynamics.csv, dynamics_summary.json and dynamics.dat into out_dir. */
Q2S_API q2s_status q2s_run_sweep(const q2s_sweep_config* config, const char* out_dir,
                                 q2s_sweep_totals* totals);

#ifdef __cplusplus
}
#endif

#endif /* Q2SAT_Q2SAT_H */
