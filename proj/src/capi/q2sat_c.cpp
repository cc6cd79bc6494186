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


#include "q2sat/q2sat.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "q2sat/chain.hpp"
#include "q2sat/dynamics.hpp"
#include "q2sat/error.hpp"
#include "q2sat/experiments.hpp"
#include "q2sat/holonomy.hpp"
#include "q2sat/instance.hpp"
#include "q2sat/reports.hpp"
#include "q2sat/spectrum.hpp"

using namespace q2sat;

struct q2s_instance {
  Q2SATInstance inst;
};

struct q2s_spectrum {
  Q2SATInstance inst;
  SparseHamiltonian h0;
  SpectrumResult result;
  double wall_time_ms = 0.0;
};

struct q2s_evolution {
  Q2SATInstance inst;
  EvolutionResult result;
  std::uint64_t degeneracy = 0;
};

struct q2s_holonomy {
  Q2SATInstance inst;
  HolonomyCheck check;
};

namespace {

thread_local std::string last_error;

template <typename F>
q2s_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return Q2S_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return Q2S_ERR_PARSE;
  } catch (const IoError& e) {
    last_error = e.what();
    return Q2S_ERR_IO;
  } catch (const ParameterError& e) {
    last_error = e.what();
    return Q2S_ERR_INVALID_ARGUMENT;
  } catch (const NumericalError& e) {
    last_error = e.what();
    return Q2S_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return Q2S_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return Q2S_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown internal error";
    return Q2S_ERR_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw ParameterError(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ClauseParams to_clause(const q2s_clause* c) {
  ClauseParams p;
  if (c) {
    p.beta = cplx(c->beta_re, c->beta_im);
    p.delta = c->delta;
  }
  p.validate();
  return p;
}

q2s_clause from_clause(const ClauseParams& p) {
  return {p.beta.real(), p.beta.imag(), p.delta};
}

RotationSchedule make_schedule(const double axis[3], int direction, double total_time) {
  RotationSchedule s;
  s.axis = Eigen::Vector3d(axis[0], axis[1], axis[2]);
  s.direction = direction;
  s.total_time = total_time;
  s.validate();
  return s;
}

StateVector initial_state(int n, std::uint64_t index) {
  if (index >= (std::uint64_t{1} << n))
    throw ParameterError("initial basis index out of range for " + std::to_string(n) + " qubits");
  return basis_state(n, index);
}

std::filesystem::path prepare_dir(const char* dir) {
  require(dir, "out_dir");
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw IoError("cannot create output directory '" + p.string() + "': " + ec.message());
  return p;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os << text;
  if (!os) throw IoError("write failed for '" + path.string() + "'");
}

template <typename Writer>
void write_with(const std::filesystem::path& path, Writer&& w) {
  std::ostringstream ss;
  w(ss);
  write_text(path, ss.str());
}

SpectrumOptions experiment_spectrum_defaults() { return SpectrumOptions{}; }

}  // namespace

extern "C" {

const char* q2s_version(void) { return "0.1.0"; }

const char* q2s_last_error(void) { return last_error.c_str(); }

const char* q2s_status_name(q2s_status status) {
  switch (status) {
    case Q2S_OK: return "ok";
    case Q2S_ERR_INVALID_ARGUMENT: return "invalid argument";
    case Q2S_ERR_PARSE: return "parse error";
    case Q2S_ERR_IO: return "i/o error";
    case Q2S_ERR_NUMERICAL: return "numerical failure";
    case Q2S_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void q2s_string_free(char* text) { std::free(text); }

// ------------------------------------------------------------------ instances

void q2s_clause_default(q2s_clause* clause) {
  if (clause) *clause = from_clause(ClauseParams{});
}

q2s_status q2s_instance_generate(int n, double d, const q2s_clause* clause, uint64_t seed,
                                 q2s_instance** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    *out = new q2s_instance{generate_instance(n, d, to_clause(clause), seed)};
  });
}

q2s_status q2s_instance_create(int n, const int* edges, int m, const q2s_clause* clause,
                               uint64_t seed, double density, q2s_instance** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    if (m < 0) throw ParameterError("edge count must be non-negative");
    if (m > 0) require(edges, "edges");
    std::vector<Edge> list;
    for (int j = 0; j < m; ++j) list.push_back({edges[2 * j], edges[2 * j + 1]});
    *out = new q2s_instance{Q2SATInstance(n, std::move(list), to_clause(clause), seed, density)};
  });
}

q2s_status q2s_instance_read(const char* path, q2s_instance** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = new q2s_instance{read_instance(path)};
  });
}

q2s_status q2s_instance_write(const q2s_instance* inst, const char* path) {
  return guarded([&] {
    require(inst, "instance");
    require(path, "path");
    write_instance(inst->inst, path);
  });
}

q2s_status q2s_instance_to_json(const q2s_instance* inst, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = copy_string(format_instance(inst->inst));
  });
}

q2s_status q2s_instance_info_get(const q2s_instance* inst, q2s_instance_info* info) {
  return guarded([&] {
    require(inst, "instance");
    require(info, "info");
    info->n = inst->inst.n();
    info->m = inst->inst.m();
    info->seed = inst->inst.seed();
    info->density = inst->inst.density();
    info->clause = from_clause(inst->inst.clause());
    info->components = static_cast<int>(connected_components(inst->inst).size());
  });
}

q2s_status q2s_instance_edge(const q2s_instance* inst, int index, int* a, int* b) {
  return guarded([&] {
    require(inst, "instance");
    require(a, "a");
    require(b, "b");
    if (index < 0 || index >= inst->inst.m()) throw ParameterError("edge index out of range");
    *a = inst->inst.edges()[static_cast<std::size_t>(index)].a;
    *b = inst->inst.edges()[static_cast<std::size_t>(index)].b;
  });
}

void q2s_instance_free(q2s_instance* inst) { delete inst; }

// ------------------------------------------------------------------ spectrum

void q2s_spectrum_options_init(q2s_spectrum_options* options) {
  if (!options) return;
  const SpectrumOptions d;
  options->degeneracy_tol = d.degeneracy_tol;
  options->residual_tol = d.residual_tol;
  options->block_size = d.block_size;
  options->max_subspace = d.max_subspace;
  options->max_restarts = d.max_restarts;
  options->parallelism = d.parallelism;
  options->dense = 0;
  options->keep_basis = 1;
  options->seed = d.seed;
}

q2s_status q2s_spectrum_compute(const q2s_instance* inst, const q2s_spectrum_options* options,
                                q2s_spectrum** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    q2s_spectrum_options o;
    q2s_spectrum_options_init(&o);
    if (options) o = *options;
    SpectrumOptions so;
    so.degeneracy_tol = o.degeneracy_tol;
    so.energy_unit = inst->inst.clause().delta;
    so.residual_tol = o.residual_tol;
    so.block_size = o.block_size;
    so.max_subspace = o.max_subspace;
    so.max_restarts = o.max_restarts;
    so.parallelism = o.parallelism;
    so.keep_basis = o.keep_basis != 0;
    so.seed = o.seed;
    if (!(so.degeneracy_tol > 0.0) || !(so.residual_tol > 0.0))
      throw ParameterError("spectrum tolerances must be positive");
    if (so.block_size < 1 || so.max_subspace < 2 || so.max_restarts < 0 || so.parallelism < 1)
      throw ParameterError("spectrum solver sizes are out of range");

    const auto start = std::chrono::steady_clock::now();
    SparseHamiltonian h0 = build_h0(inst->inst);
    SpectrumResult res = o.dense ? spectrum_from_dense(h0, so) : ground_and_gap(h0, so);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    *out = new q2s_spectrum{inst->inst, std::move(h0), std::move(res), ms};
  });
}

q2s_status q2s_spectrum_summary_get(const q2s_spectrum* spec, q2s_spectrum_summary* out) {
  return guarded([&] {
    require(spec, "spectrum");
    require(out, "out");
    const SpectrumResult& r = spec->result;
    out->ground_energy = r.ground_energy;
    out->has_gap = r.gap_delta.has_value();
    out->gap_delta = r.gap_delta.value_or(0.0);
    out->degeneracy = r.degeneracy;
    out->ambiguous = r.ambiguous;
    out->method = r.method == SpectrumMethod::Dense ? 0 : 1;
    out->max_residual = r.max_residual;
    out->components = r.components;
    out->sectors_solved = r.sectors_solved;
    out->wall_time_ms = spec->wall_time_ms;
  });
}

q2s_status q2s_spectrum_report_json(const q2s_spectrum* spec, int include_timing, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(spec, "spectrum");
    require(out, "out");
    std::optional<double> t;
    if (include_timing) t = spec->wall_time_ms;
    *out = copy_string(spectrum_report(spec->inst, spec->result, t));
  });
}

void q2s_spectrum_free(q2s_spectrum* spec) { delete spec; }

// ----------------------------------------------------------------- evolution

void q2s_evolve_options_init(q2s_evolve_options* options) {
  if (!options) return;
  const EvolveOptions d;
  options->multiplier = 1.0;
  options->total_time = 0.0;
  options->axis[0] = 0.0;
  options->axis[1] = 1.0;
  options->axis[2] = 0.0;
  options->direction = 1;
  options->steps = 0;
  options->enforce_step_rule = 1;
  options->checkpoints = 0;
  options->max_norm_drift = d.max_norm_drift;
  options->frame = Q2S_FRAME_LAB;
  options->initial_index = 0;
}

q2s_status q2s_evolve(const q2s_instance* inst, const q2s_spectrum* spec,
                      const q2s_evolve_options* options, q2s_evolution** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(inst, "instance");
    require(spec, "spectrum");
    require(out, "out");
    if (!(spec->inst == inst->inst))
      throw ParameterError("spectrum was computed for a different instance");
    if (spec->result.ground_basis.size() != spec->result.degeneracy)
      throw ParameterError("spectrum was computed without its ground basis");
    q2s_evolve_options o;
    q2s_evolve_options_init(&o);
    if (options) o = *options;

    double total = o.total_time;
    if (!(total > 0.0)) {
      if (!spec->result.gap_delta)
        throw ParameterError("instance has no gap; give an explicit total time");
      total = schedule_from_gap(*spec->result.gap_delta, o.multiplier).total_time;
    }
    const RotationSchedule sched = make_schedule(o.axis, o.direction, total);
    EvolveOptions eo;
    eo.steps = o.steps;
    eo.enforce_step_rule = o.enforce_step_rule != 0;
    eo.checkpoints = o.checkpoints;
    eo.max_norm_drift = o.max_norm_drift;
    if (eo.steps < 0 || eo.checkpoints < 0) throw ParameterError("steps and checkpoints must be >= 0");
    const StateVector psi0 = initial_state(inst->inst.n(), o.initial_index);
    EvolutionResult ev =
        o.frame == Q2S_FRAME_ROTATING
            ? evolve_rotating(spec->h0, sched, psi0, spec->result.ground_basis, eo)
            : evolve_lab(spec->h0, sched, psi0, spec->result.ground_basis, eo);
    *out = new q2s_evolution{inst->inst, std::move(ev), spec->result.degeneracy};
  });
}

q2s_status q2s_evolution_summary_get(const q2s_evolution* ev, q2s_evolution_summary* out) {
  return guarded([&] {
    require(ev, "evolution");
    require(out, "out");
    const EvolutionResult& r = ev->result;
    out->total_time = r.schedule.total_time;
    out->steps = r.steps;
    out->frame = r.frame == Frame::Lab ? Q2S_FRAME_LAB : Q2S_FRAME_ROTATING;
    out->ground_fidelity = r.measurement.ground_fidelity;
    out->trivial_probability = r.measurement.trivial_probability;
    out->norm_drift = r.norm_drift;
    out->degeneracy = ev->degeneracy;
    out->wall_time_ms = r.wall_time_ms;
  });
}

q2s_status q2s_evolution_report_json(const q2s_evolution* ev, int include_timing, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(ev, "evolution");
    require(out, "out");
    std::optional<double> t;
    if (include_timing) t = ev->result.wall_time_ms;
    *out = copy_string(evolution_report(ev->inst, ev->result, t));
  });
}

q2s_status q2s_evolution_checkpoints_csv(const q2s_evolution* ev, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(ev, "evolution");
    require(out, "out");
    std::ostringstream ss;
    write_checkpoints_csv(ev->result.checkpoints, ss);
    *out = copy_string(ss.str());
  });
}

q2s_status q2s_evolution_fidelity(const q2s_evolution* a, const q2s_evolution* b, double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = state_fidelity(a->result.final_state, b->result.final_state);
  });
}

void q2s_evolution_free(q2s_evolution* ev) { delete ev; }

// ------------------------------------------------------------------ holonomy

void q2s_holonomy_options_init(q2s_holonomy_options* options) {
  if (!options) return;
  options->total_time = 1e3;
  options->axis[0] = 0.0;
  options->axis[1] = 1.0;
  options->axis[2] = 0.0;
  options->direction = 1;
  options->convention = Q2S_GAUGE_STANDARD;
  options->path_steps = 1;
  options->cross_check_frame = Q2S_FRAME_ROTATING;
  options->steps = 0;
  options->initial_index = 0;
}

q2s_status q2s_holonomy_compute(const q2s_instance* inst, const q2s_spectrum* spec,
                                const q2s_holonomy_options* options, q2s_holonomy** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(inst, "instance");
    require(spec, "spectrum");
    require(out, "out");
    if (!(spec->inst == inst->inst))
      throw ParameterError("spectrum was computed for a different instance");
    const GroundBasis& basis = spec->result.ground_basis;
    if (basis.size() != spec->result.degeneracy)
      throw ParameterError("spectrum was computed without its ground basis");
    q2s_holonomy_options o;
    q2s_holonomy_options_init(&o);
    if (options) o = *options;
    const RotationSchedule sched = make_schedule(o.axis, o.direction, o.total_time);
    const GaugeConvention conv =
        o.convention == Q2S_GAUGE_REVERSED ? GaugeConvention::Reversed : GaugeConvention::Standard;

    HolonomyCheck check;
    check.convention = conv;
    check.total_time = sched.total_time;
    check.holonomy = compute_holonomy(basis, sched, conv, o.path_steps);
    const StateVector psi0 = initial_state(inst->inst.n(), o.initial_index);
    const StateVector predicted = predict_final_state(check.holonomy.holonomy, psi0, basis);
    check.predicted = measure_against_basis(predicted, basis);
    if (o.cross_check_frame >= 0) {
      EvolveOptions eo;
      eo.steps = o.steps;
      const bool rotating = o.cross_check_frame == Q2S_FRAME_ROTATING;
      const EvolutionResult ev = rotating ? evolve_rotating(spec->h0, sched, psi0, basis, eo)
                                          : evolve_lab(spec->h0, sched, psi0, basis, eo);
      check.fidelity_vs_evolution = state_fidelity(predicted, ev.final_state);
      check.evolution_frame = rotating ? Frame::Rotating : Frame::Lab;
    }
    *out = new q2s_holonomy{inst->inst, std::move(check)};
  });
}

q2s_status q2s_holonomy_summary_get(const q2s_holonomy* hol, q2s_holonomy_summary* out) {
  return guarded([&] {
    require(hol, "holonomy");
    require(out, "out");
    out->g = static_cast<uint64_t>(hol->check.holonomy.holonomy.rows());
    out->unitarity_error = hol->check.holonomy.unitarity_error;
    out->has_fidelity = hol->check.fidelity_vs_evolution.has_value();
    out->fidelity_vs_evolution = hol->check.fidelity_vs_evolution.value_or(0.0);
    out->predicted_trivial_probability = hol->check.predicted.trivial_probability;
  });
}

q2s_status q2s_holonomy_report_json(const q2s_holonomy* hol, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(hol, "holonomy");
    require(out, "out");
    *out = copy_string(holonomy_report(hol->inst, hol->check));
  });
}

void q2s_holonomy_free(q2s_holonomy* hol) { delete hol; }

// ----------------------------------------------------------------- pipelines

q2s_status q2s_chain_table(const int* lengths, int n_lengths, const double* betas, int n_betas,
                           int periodic, double delta, char** csv, double* exponent) {
  if (csv) *csv = nullptr;
  return guarded([&] {
    require(csv, "csv");
    if (n_lengths < 1 || n_betas < 1) throw ParameterError("chain table needs lengths and betas");
    require(lengths, "lengths");
    require(betas, "betas");
    const std::vector<int> ns(lengths, lengths + n_lengths);
    const std::vector<double> bs(betas, betas + n_betas);
    const Boundary boundary = periodic ? Boundary::Periodic : Boundary::Open;
    const auto rows = chain_gap_table(ns, bs, boundary, delta);
    if (exponent) {
      const auto first = chain_gap_table(ns, {bs.front()}, boundary, delta);
      *exponent = first.size() >= 2 ? fit_gap_exponent(first).slope : std::nan("");
    }
    std::ostringstream ss;
    write_chain_csv(rows, ss);
    *csv = copy_string(ss.str());
  });
}

void q2s_scaling_config_init(q2s_scaling_config* config) {
  if (!config) return;
  static const int default_n[] = {5, 6, 7, 8, 9, 10, 11};
  config->n_values = default_n;
  config->samples = nullptr;
  config->count = 7;
  config->full = 0;
  config->d = 0.1;
  q2s_clause_default(&config->clause);
  config->base_seed = 1;
  config->parallelism = 1;
  config->min_gap = 1e-7;
}

q2s_status q2s_run_scaling(const q2s_scaling_config* config, const char* out_dir,
                           q2s_scaling_fit* fit) {
  return guarded([&] {
    require(config, "config");
    if (config->count < 1) throw ParameterError("scaling needs at least one n");
    require(config->n_values, "n_values");
    ScalingConfig sc;
    sc.n_values.assign(config->n_values, config->n_values + config->count);
    for (int i = 0; i < config->count; ++i)
      sc.samples.push_back(config->samples ? config->samples[i]
                                           : default_sample_count(sc.n_values[static_cast<std::size_t>(i)],
                                                                  config->full != 0));
    sc.d = config->d;
    sc.clause = to_clause(&config->clause);
    sc.base_seed = config->base_seed;
    sc.parallelism = config->parallelism;
    sc.min_gap = config->min_gap;
    sc.spectrum = experiment_spectrum_defaults();
    sc.spectrum.energy_unit = sc.clause.delta;
    const std::filesystem::path dir = prepare_dir(out_dir);
    const auto records = run_scaling(sc);
    write_with(dir / "scaling.csv", [&](std::ostream& os) { write_scaling_csv(records, os); });
    write_text(dir / "scaling_fit.json", scaling_fit_json(records, sc));
    write_with(dir / "scaling.dat", [&](std::ostream& os) { write_scaling_plot(records, os); });
    if (fit) {
      *fit = {};
      for (const auto& r : records) {
        fit->samples += r.sample_count;
        fit->exclusions += r.excluded_count;
      }
      try {
        const FitResult f = fit_loglog(records);
        fit->has_fit = 1;
        fit->slope = f.slope;
        fit->intercept = f.intercept;
        fit->correlation_r = f.correlation_r;
      } catch (const ParameterError&) {
        fit->has_fit = 0;
      }
    }
  });
}

void q2s_histogram_config_init(q2s_histogram_config* config) {
  if (!config) return;
  config->n = 11;
  config->samples = 2000;
  config->d = 0.1;
  q2s_clause_default(&config->clause);
  config->base_seed = 1;
  config->parallelism = 1;
  config->bin_width = 0.1;
  config->min_gap = 1e-7;
}

q2s_status q2s_run_histogram(const q2s_histogram_config* config, const char* out_dir,
                             q2s_histogram_summary* summary) {
  return guarded([&] {
    require(config, "config");
    ScalingConfig sc;
    sc.n_values = {config->n};
    sc.samples = {config->samples};
    sc.d = config->d;
    sc.clause = to_clause(&config->clause);
    sc.base_seed = config->base_seed;
    sc.parallelism = config->parallelism;
    sc.min_gap = config->min_gap;
    sc.spectrum.energy_unit = sc.clause.delta;
    if (!(config->bin_width > 0.0)) throw ParameterError("bin width must be positive");
    const std::filesystem::path dir = prepare_dir(out_dir);
    const auto records = run_scaling(sc);
    const std::vector<double> values = records.front().included_values();
    const auto bins = histogram_inv_sq_gap(values, config->bin_width);
    const HistogramSummary s = summarize_histogram(values, bins);
    char stem[32];
    std::snprintf(stem, sizeof stem, "hist_n%02d", config->n);
    write_with(dir / (std::string(stem) + ".csv"), [&](std::ostream& os) { write_histogram_csv(bins, os); });
    write_text(dir / (std::string(stem) + ".json"), histogram_json(config->n, s, config->bin_width));
    write_with(dir / (std::string(stem) + ".dat"), [&](std::ostream& os) { write_histogram_plot(bins, os); });
    if (summary) {
      summary->count = s.count;
      summary->excluded = static_cast<uint64_t>(records.front().excluded_count);
      summary->mean = s.mean;
      summary->median = s.median;
      summary->modal_lo = s.modal.lo;
      summary->modal_hi = s.modal.hi;
      summary->modal_count = s.modal.count;
      summary->right_skewed = s.right_skewed;
    }
  });
}

void q2s_sweep_config_init(q2s_sweep_config* config) {
  if (!config) return;
  static const int default_n[] = {8, 9, 10};
  config->n_values = default_n;
  config->count = 3;
  config->samples = 50;
  config->d = 0.1;
  config->multiplier = 1.0;
  q2s_clause_default(&config->clause);
  config->base_seed = 1;
  config->parallelism = 1;
  config->max_n = 14;
  config->frame = Q2S_FRAME_LAB;
  config->fidelity_threshold = 0.9;
  config->trivial_threshold = 0.9;
}

q2s_status q2s_run_sweep(const q2s_sweep_config* config, const char* out_dir,
                         q2s_sweep_totals* totals) {
  return guarded([&] {
    require(config, "config");
    if (config->count < 1) throw ParameterError("sweep needs at least one n");
    require(config->n_values, "n_values");
    SweepConfig sc;
    sc.n_values.assign(config->n_values, config->n_values + config->count);
    sc.samples = config->samples;
    sc.d = config->d;
    sc.multiplier = config->multiplier;
    sc.clause = to_clause(&config->clause);
    sc.base_seed = config->base_seed;
    sc.parallelism = config->parallelism;
    sc.max_n = config->max_n;
    sc.frame = config->frame == Q2S_FRAME_ROTATING ? Frame::Rotating : Frame::Lab;
    sc.fidelity_threshold = config->fidelity_threshold;
    sc.trivial_threshold = config->trivial_threshold;
    sc.spectrum.energy_unit = sc.clause.delta;
    const std::filesystem::path dir = prepare_dir(out_dir);
    const SweepResult result = run_dynamics_sweep(sc);
    write_with(dir / "dynamics.csv", [&](std::ostream& os) { write_dynamics_csv(result, os); });
    write_text(dir / "dynamics_summary.json", sweep_summary_json(result, sc));
    write_with(dir / "dynamics.dat", [&](std::ostream& os) { write_dynamics_plot(result, os); });
    if (totals) {
      *totals = {};
      for (const SweepSummary& s : result.summaries) {
        totals->count += s.count;
        totals->passing += s.passing;
      }
      totals->pass_fraction = totals->count ? static_cast<double>(totals->passing) / totals->count : 0.0;
    }
  });
}

}  // extern "C"
