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


// Exercises the C interface from plain C: handle lifetimes, status codes,
// error messages and the file-producing pipelines.

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "q2sat/q2sat.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__,    \
              __LINE__, #cond);                                       \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define EXPECT_OK(call)                                               \
  do {                                                                \
    q2s_status st_ = (call);                                          \
    if (st_ != Q2S_OK) {                                              \
      fprintf(stderr, "%s:%d: %s returned %s: %s\n", __FILE__,        \
              __LINE__, #call, q2s_status_name(st_), q2s_last_error()); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int file_exists(const char* dir, const char* name) {
  char path[1024];
  snprintf(path, sizeof path, "%s/%s", dir, name);
  FILE* f = fopen(path, "rb");
  if (!f) return 0;
  fclose(f);
  return 1;
}

static void test_errors(void) {
  q2s_instance* inst = NULL;
  q2s_clause clause;
  q2s_clause_default(&clause);
  EXPECT(fabs(clause.beta_re - sqrt(0.5)) < 1e-15);
  EXPECT(q2s_instance_generate(1, 0.5, &clause, 0, &inst) == Q2S_ERR_INVALID_ARGUMENT);
  EXPECT(inst == NULL);
  EXPECT(strlen(q2s_last_error()) > 0);
  clause.beta_re = 2.0;
  EXPECT(q2s_instance_generate(4, 0.5, &clause, 0, &inst) == Q2S_ERR_INVALID_ARGUMENT);
  EXPECT(q2s_instance_generate(4, 0.5, NULL, 0, NULL) == Q2S_ERR_INVALID_ARGUMENT);
  EXPECT(q2s_instance_read("/nonexistent/instance.json", &inst) == Q2S_ERR_IO);
  EXPECT(strcmp(q2s_status_name(Q2S_ERR_NUMERICAL), "") != 0);
  EXPECT(q2s_version() != NULL && strlen(q2s_version()) > 0);

  const int self_loop[2] = {1, 1};
  EXPECT(q2s_instance_create(3, self_loop, 1, NULL, 0, 0.0, &inst) == Q2S_ERR_INVALID_ARGUMENT);
  q2s_instance_free(NULL);
  q2s_spectrum_free(NULL);
  q2s_evolution_free(NULL);
  q2s_holonomy_free(NULL);
  q2s_string_free(NULL);
}

static void test_instance_round_trip(const char* dir) {
  q2s_clause clause;
  q2s_clause_default(&clause);
  q2s_instance* inst = NULL;
  EXPECT_OK(q2s_instance_generate(8, 0.4, &clause, 7, &inst));
  q2s_instance_info info;
  EXPECT_OK(q2s_instance_info_get(inst, &info));
  EXPECT(info.n == 8);
  EXPECT(info.seed == 7);
  EXPECT(info.components >= 1);
  if (info.m > 0) {
    int a = -1, b = -1;
    EXPECT_OK(q2s_instance_edge(inst, 0, &a, &b));
    EXPECT(a >= 0 && a < b && b < 8);
  }
  EXPECT(q2s_instance_edge(inst, info.m, NULL, NULL) == Q2S_ERR_INVALID_ARGUMENT);

  char path[1024];
  snprintf(path, sizeof path, "%s/capi_instance.json", dir);
  EXPECT_OK(q2s_instance_write(inst, path));
  q2s_instance* back = NULL;
  EXPECT_OK(q2s_instance_read(path, &back));
  char* j1 = NULL;
  char* j2 = NULL;
  EXPECT_OK(q2s_instance_to_json(inst, &j1));
  EXPECT_OK(q2s_instance_to_json(back, &j2));
  EXPECT(j1 && j2 && strcmp(j1, j2) == 0);
  q2s_string_free(j1);
  q2s_string_free(j2);
  q2s_instance_free(back);
  q2s_instance_free(inst);

  FILE* f = fopen(path, "wb");
  fputs("{ not json", f);
  fclose(f);
  EXPECT(q2s_instance_read(path, &back) == Q2S_ERR_PARSE);
}

static void test_spectrum_and_dynamics(void) {
  const int edges[4] = {0, 1, 1, 2};
  q2s_instance* inst = NULL;
  EXPECT_OK(q2s_instance_create(3, edges, 2, NULL, 0, 0.0, &inst));

  q2s_spectrum_options so;
  q2s_spectrum_options_init(&so);
  q2s_spectrum* spec = NULL;
  EXPECT_OK(q2s_spectrum_compute(inst, &so, &spec));
  q2s_spectrum_summary ss;
  EXPECT_OK(q2s_spectrum_summary_get(spec, &ss));
  EXPECT(ss.degeneracy == 4);
  EXPECT(ss.has_gap);
  EXPECT(fabs(ss.ground_energy) < 1e-10);
  char* report = NULL;
  EXPECT_OK(q2s_spectrum_report_json(spec, 0, &report));
  EXPECT(report && strstr(report, "wall_time_ms") == NULL);
  q2s_string_free(report);

  q2s_evolve_options eo;
  q2s_evolve_options_init(&eo);
  eo.total_time = 50.0;
  eo.checkpoints = 4;
  q2s_evolution* lab = NULL;
  q2s_evolution* rot = NULL;
  EXPECT_OK(q2s_evolve(inst, spec, &eo, &lab));
  eo.frame = Q2S_FRAME_ROTATING;
  EXPECT_OK(q2s_evolve(inst, spec, &eo, &rot));
  double fid = 0.0;
  EXPECT_OK(q2s_evolution_fidelity(lab, rot, &fid));
  EXPECT(fid > 1.0 - 1e-9);
  q2s_evolution_summary es;
  EXPECT_OK(q2s_evolution_summary_get(lab, &es));
  EXPECT(es.trivial_probability <= es.ground_fidelity + 1e-12);
  EXPECT(es.steps >= 2000);
  char* csv = NULL;
  EXPECT_OK(q2s_evolution_checkpoints_csv(lab, &csv));
  EXPECT(csv && strncmp(csv, "t,norm,", 7) == 0);
  q2s_string_free(csv);

  eo.frame = Q2S_FRAME_LAB;
  eo.steps = 3;
  eo.enforce_step_rule = 0;
  eo.max_norm_drift = 1e-12;
  q2s_evolution* bad = NULL;
  EXPECT(q2s_evolve(inst, spec, &eo, &bad) == Q2S_ERR_NUMERICAL);
  EXPECT(bad == NULL);
  eo.enforce_step_rule = 1;
  EXPECT(q2s_evolve(inst, spec, &eo, &bad) == Q2S_ERR_INVALID_ARGUMENT);

  q2s_holonomy_options ho;
  q2s_holonomy_options_init(&ho);
  q2s_holonomy* hol = NULL;
  EXPECT_OK(q2s_holonomy_compute(inst, spec, &ho, &hol));
  q2s_holonomy_summary hs;
  EXPECT_OK(q2s_holonomy_summary_get(hol, &hs));
  EXPECT(hs.g == 4);
  EXPECT(hs.unitarity_error < 1e-12);
  EXPECT(hs.has_fidelity && hs.fidelity_vs_evolution >= 0.999);
  q2s_holonomy_free(hol);

  // A spectrum only pairs with the instance it was computed for.
  q2s_instance* other = NULL;
  EXPECT_OK(q2s_instance_create(3, edges, 1, NULL, 0, 0.0, &other));
  EXPECT(q2s_evolve(other, spec, &eo, &bad) == Q2S_ERR_INVALID_ARGUMENT);
  q2s_instance_free(other);

  q2s_evolution_free(lab);
  q2s_evolution_free(rot);
  q2s_spectrum_free(spec);
  q2s_instance_free(inst);
}

static void test_pipelines(const char* dir) {
  const int lengths[3] = {8, 16, 32};
  const double betas[1] = {sqrt(0.5)};
  char* csv = NULL;
  double exponent = 0.0;
  EXPECT_OK(q2s_chain_table(lengths, 3, betas, 1, 1, 1.0, &csv, &exponent));
  EXPECT(csv && strncmp(csv, "n,beta,boundary,gap", 19) == 0);
  EXPECT(exponent > -2.2 && exponent < -1.8);
  q2s_string_free(csv);

  const int ns[2] = {5, 6};
  const int counts[2] = {5, 5};
  q2s_scaling_config sc;
  q2s_scaling_config_init(&sc);
  sc.n_values = ns;
  sc.samples = counts;
  sc.count = 2;
  sc.d = 0.4;
  q2s_scaling_fit fit;
  EXPECT_OK(q2s_run_scaling(&sc, dir, &fit));
  EXPECT(fit.samples == 10);
  EXPECT(file_exists(dir, "scaling.csv"));
  EXPECT(file_exists(dir, "scaling_fit.json"));
  EXPECT(file_exists(dir, "scaling.dat"));
  sc.count = 0;
  EXPECT(q2s_run_scaling(&sc, dir, &fit) == Q2S_ERR_INVALID_ARGUMENT);

  q2s_histogram_config hc;
  q2s_histogram_config_init(&hc);
  EXPECT(hc.n == 11 && hc.samples == 2000);
  hc.n = 6;
  hc.samples = 20;
  hc.d = 0.4;
  q2s_histogram_summary hsum;
  EXPECT_OK(q2s_run_histogram(&hc, dir, &hsum));
  EXPECT(hsum.count + hsum.excluded == 20);
  EXPECT(file_exists(dir, "hist_n06.csv"));

  const int sn[1] = {4};
  q2s_sweep_config wc;
  q2s_sweep_config_init(&wc);
  wc.n_values = sn;
  wc.count = 1;
  wc.samples = 4;
  wc.d = 0.4;
  q2s_sweep_totals tot;
  EXPECT_OK(q2s_run_sweep(&wc, dir, &tot));
  EXPECT(tot.count == 4);
  EXPECT(file_exists(dir, "dynamics.csv"));
  EXPECT(file_exists(dir, "dynamics_summary.json"));
  wc.max_n = 3;
  EXPECT(q2s_run_sweep(&wc, dir, &tot) == Q2S_ERR_INVALID_ARGUMENT);
}

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  test_errors();
  test_instance_round_trip(dir);
  test_spectrum_and_dynamics();
  test_pipelines(dir);
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  puts("capi: all checks passed");
  return 0;
}
