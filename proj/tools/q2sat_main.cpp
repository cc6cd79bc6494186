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


// Command-line front end. Everything goes through the C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "q2sat/q2sat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct Failure {
  q2s_status status;
  std::string message;
};

void check(q2s_status s) {
  if (s != Q2S_OK) throw Failure{s, q2s_last_error()};
}

int exit_code(q2s_status s) {
  return (s == Q2S_ERR_NUMERICAL || s == Q2S_ERR_INTERNAL) ? kExitNumerical : kExitUsage;
}

struct StringDeleter {
  void operator()(char* p) const { q2s_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(q2s_instance* p) const { q2s_instance_free(p); }
};
struct SpectrumDeleter {
  void operator()(q2s_spectrum* p) const { q2s_spectrum_free(p); }
};
struct EvolutionDeleter {
  void operator()(q2s_evolution* p) const { q2s_evolution_free(p); }
};
struct HolonomyDeleter {
  void operator()(q2s_holonomy* p) const { q2s_holonomy_free(p); }
};
using InstancePtr = std::unique_ptr<q2s_instance, InstanceDeleter>;
using SpectrumPtr = std::unique_ptr<q2s_spectrum, SpectrumDeleter>;
using EvolutionPtr = std::unique_ptr<q2s_evolution, EvolutionDeleter>;
using HolonomyPtr = std::unique_ptr<q2s_holonomy, HolonomyDeleter>;

std::string default_out_dir() {
  const char* env = std::getenv("Q2SAT_OUT_DIR");
  return (env && *env) ? env : "runs";
}

// "5..11", "8,16,32" or a mix such as "5..7,10".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dots));
        const int hi = std::stoi(part.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("range '" + part + "' is empty");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("'" + part + "' is not an integer or a range a..b");
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      out.push_back(std::stod(part));
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("'" + part + "' is not a number");
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty number list");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Failure{Q2S_ERR_IO, "cannot open '" + path + "' for writing"};
  os << text;
}

std::vector<double> parse_axis(const std::string& text) {
  std::vector<double> a = parse_double_list(text);
  if (a.size() != 3) throw CLI::ValidationError("axis needs three components x,y,z");
  const double nrm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (!(nrm > 0.0)) throw CLI::ValidationError("axis must be non-zero");
  for (double& x : a) x /= nrm;
  return a;
}

// Options shared by every subcommand that needs an instance.
struct InstanceSource {
  std::string in_path;
  int n = 0;
  double d = 0.1;
  std::uint64_t seed = 1;
  double beta_re = 0.70710678118654752440;
  double beta_im = 0.0;
  double delta = 1.0;
  CLI::Option* in_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App* app, bool allow_file) {
    if (allow_file) in_opt = app->add_option("--in", in_path, "Instance file to read");
    n_opt = app->add_option("--n", n, "Generate an instance with this many qubits")
                ->check(CLI::Range(2, 30));
    if (in_opt) {
      in_opt->excludes(n_opt);
      n_opt->excludes(in_opt);
    }
    app->add_option("--d", d, "Edge probability for generation")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_option("--seed", seed, "Generation seed")->capture_default_str();
    app->add_option("--beta-re", beta_re, "Real part of the clause amplitude beta")
        ->capture_default_str();
    app->add_option("--beta-im", beta_im, "Imaginary part of beta")->capture_default_str();
    app->add_option("--delta", delta, "Clause energy scale")->capture_default_str();
  }

  InstancePtr load() const {
    q2s_instance* raw = nullptr;
    if (!in_path.empty()) {
      check(q2s_instance_read(in_path.c_str(), &raw));
    } else {
      if (n == 0) throw CLI::RequiredError("--in or --n");
      const q2s_clause c{beta_re, beta_im, delta};
      check(q2s_instance_generate(n, d, &c, seed, &raw));
    }
    return InstancePtr(raw);
  }
};

struct SpectrumFlags {
  bool dense = false;
  double degeneracy_tol = 1e-9;
  double residual_tol = 1e-10;
  int parallelism = 1;

  void attach(CLI::App* app) {
    app->add_flag("--dense", dense, "Use full dense diagonalization (n <= 12)");
    app->add_option("--degeneracy-tol", degeneracy_tol, "Ground-level threshold in units of delta")
        ->capture_default_str();
    app->add_option("--residual-tol", residual_tol, "Ritz residual tolerance in units of delta")
        ->capture_default_str();
    app->add_option("-j,--parallelism", parallelism, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  SpectrumPtr compute(const q2s_instance* inst, bool keep_basis) const {
    q2s_spectrum_options o;
    q2s_spectrum_options_init(&o);
    o.dense = dense;
    o.degeneracy_tol = degeneracy_tol;
    o.residual_tol = residual_tol;
    o.parallelism = parallelism;
    o.keep_basis = keep_basis;
    q2s_spectrum* raw = nullptr;
    check(q2s_spectrum_compute(inst, &o, &raw));
    return SpectrumPtr(raw);
  }
};

q2s_frame parse_frame(const std::string& s) {
  return s == "rotating" ? Q2S_FRAME_ROTATING : Q2S_FRAME_LAB;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic rotation toolkit for quantum 2-SAT with identical clauses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", q2s_version());

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  InstanceSource gen_src;
  std::string gen_out = "-";
  gen_src.attach(gen, false);
  gen_src.n_opt->required();
  gen->add_option("--out", gen_out, "Output path ('-' for standard output)")->capture_default_str();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Ground energy, degeneracy and gap report");
  InstanceSource spec_src;
  SpectrumFlags spec_flags;
  std::string spec_out = "-";
  bool spec_timing = false;
  spec_src.attach(spectrum, true);
  spec_flags.attach(spectrum);
  spectrum->add_option("--out", spec_out, "Report path ('-' for standard output)")->capture_default_str();
  spectrum->add_flag("--timing", spec_timing, "Include wall-clock time in the report");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Adiabatic rotation from |0...0> and measurement");
  InstanceSource ev_src;
  SpectrumFlags ev_flags;
  double ev_mult = 1.0, ev_T = 0.0, ev_drift = 1e-4;
  std::string ev_axis = "0,1,0", ev_frame = "lab", ev_out = "-", ev_ck_out;
  int ev_dir = 1, ev_ck = 0;
  std::int64_t ev_steps = 0;
  bool ev_allow_few = false, ev_timing = false;
  ev_src.attach(evolve, true);
  ev_flags.attach(evolve);
  evolve->add_option("--multiplier", ev_mult, "Schedule multiplier on pi/(50 gap^2)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve->add_option("--T", ev_T, "Explicit total time (overrides the multiplier)");
  evolve->add_option("--axis", ev_axis, "Rotation axis x,y,z (normalized)")->capture_default_str();
  evolve->add_option("--direction", ev_dir, "Traversal direction +1 or -1")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  evolve->add_option("--steps", ev_steps, "RK4 steps (0 = step rule)")->capture_default_str();
  evolve->add_flag("--allow-few-steps", ev_allow_few, "Permit step counts below the step rule");
  evolve->add_option("--max-norm-drift", ev_drift, "Largest accepted norm drift")->capture_default_str();
  evolve->add_option("--frame", ev_frame, "lab (RK4) or rotating (Krylov exponential)")
      ->check(CLI::IsMember({"lab", "rotating"}))
      ->capture_default_str();
  evolve->add_option("--checkpoints", ev_ck, "Number of intermediate diagnostic rows")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  evolve->add_option("--checkpoints-csv", ev_ck_out, "Also write the diagnostic rows as CSV");
  evolve->add_option("--out", ev_out, "Report path ('-' for standard output)")->capture_default_str();
  evolve->add_flag("--timing", ev_timing, "Include wall-clock time in the report");

  // holonomy
  auto* holo = app.add_subcommand("holonomy", "Gauge matrix, holonomy and evolution cross-check");
  InstanceSource ho_src;
  SpectrumFlags ho_flags;
  double ho_T = 1e3;
  std::string ho_axis = "0,1,0", ho_conv = "standard", ho_check = "rotating", ho_out = "-";
  int ho_dir = 1, ho_path = 1;
  ho_src.attach(holo, true);
  ho_flags.attach(holo);
  holo->add_option("--T", ho_T, "Total rotation time")->check(CLI::PositiveNumber)->capture_default_str();
  holo->add_option("--axis", ho_axis, "Rotation axis x,y,z (normalized)")->capture_default_str();
  holo->add_option("--direction", ho_dir, "Traversal direction +1 or -1")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  holo->add_option("--convention", ho_conv, "Gauge sign convention")
      ->check(CLI::IsMember({"standard", "reversed"}))
      ->capture_default_str();
  holo->add_option("--path-steps", ho_path, "Midpoint steps of the path-ordered product")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  holo->add_option("--cross-check", ho_check, "Evolution to compare against")
      ->check(CLI::IsMember({"none", "lab", "rotating"}))
      ->capture_default_str();
  holo->add_option("--out", ho_out, "Report path ('-' for standard output)")->capture_default_str();

  // chain
  auto* chain = app.add_subcommand("chain", "One-magnon gap table for nearest-neighbour chains");
  std::string ch_n = "8,16,32,64", ch_beta = "0.70710678118654752", ch_boundary = "periodic", ch_out = "-";
  double ch_delta = 1.0;
  chain->add_option("--n", ch_n, "Chain lengths (list or a..b range)")->capture_default_str();
  chain->add_option("--beta", ch_beta, "Comma-separated beta values in [0, 1]")->capture_default_str();
  chain->add_option("--boundary", ch_boundary, "open or periodic")
      ->check(CLI::IsMember({"open", "periodic"}))
      ->capture_default_str();
  chain->add_option("--delta", ch_delta, "Clause energy scale")->capture_default_str();
  chain->add_option("--out", ch_out, "CSV path ('-' for standard output)")->capture_default_str();

  // scaling
  auto* scaling = app.add_subcommand("scaling", "Ensemble gap scaling and log-log fit");
  std::string sc_n = "5..11", sc_out;
  int sc_samples = 0, sc_j = 1;
  bool sc_full = false;
  double sc_d = 0.1, sc_min_gap = 1e-7, sc_beta_re = 0.70710678118654752440, sc_beta_im = 0.0, sc_delta = 1.0;
  std::uint64_t sc_seed = 1;
  scaling->add_option("--n", sc_n, "Qubit counts (list or a..b range)")->capture_default_str();
  scaling->add_option("--samples", sc_samples,
                      "Samples per n (0 = 500 for n<=11, 100 for n<=13, 30 above)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  scaling->add_flag("--full", sc_full, "Long-run sample counts (10000 / 1000 / 100)");
  scaling->add_option("--d", sc_d, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  scaling->add_option("--seed", sc_seed, "Base seed; instance i uses base + i")->capture_default_str();
  scaling->add_option("--min-gap", sc_min_gap, "Exclusion threshold on the gap")->capture_default_str();
  scaling->add_option("--beta-re", sc_beta_re, "Real part of beta")->capture_default_str();
  scaling->add_option("--beta-im", sc_beta_im, "Imaginary part of beta")->capture_default_str();
  scaling->add_option("--delta", sc_delta, "Clause energy scale")->capture_default_str();
  scaling->add_option("-j,--parallelism", sc_j, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  scaling->add_option("--out", sc_out, "Output directory (default $Q2SAT_OUT_DIR or runs)");

  // hist
  auto* hist = app.add_subcommand("hist", "Histogram of inverse square gaps at one n");
  int hi_n = 11, hi_samples = 2000, hi_j = 1;
  double hi_d = 0.1, hi_width = 0.1, hi_min_gap = 1e-7;
  std::uint64_t hi_seed = 1;
  std::string hi_out;
  hist->add_option("--n", hi_n, "Qubit count")->check(CLI::Range(2, 30))->capture_default_str();
  hist->add_option("--samples", hi_samples, "Number of instances")->check(CLI::PositiveNumber)->capture_default_str();
  hist->add_option("--d", hi_d, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  hist->add_option("--bin-width", hi_width, "Bin width")->check(CLI::PositiveNumber)->capture_default_str();
  hist->add_option("--seed", hi_seed, "Base seed")->capture_default_str();
  hist->add_option("--min-gap", hi_min_gap, "Exclusion threshold on the gap")->capture_default_str();
  hist->add_option("-j,--parallelism", hi_j, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  hist->add_option("--out", hi_out, "Output directory (default $Q2SAT_OUT_DIR or runs)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Trivial-state probability after the adiabatic rotation");
  std::string sw_n = "8..10", sw_frame = "lab", sw_out;
  int sw_samples = 50, sw_j = 1, sw_max_n = 14;
  double sw_d = 0.1, sw_mult = 1.0, sw_fid = 0.9, sw_triv = 0.9;
  std::uint64_t sw_seed = 1;
  sweep->add_option("--n", sw_n, "Qubit counts (list or a..b range)")->capture_default_str();
  sweep->add_option("--samples", sw_samples, "Instances per n")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--d", sw_d, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  sweep->add_option("--multiplier", sw_mult, "Schedule multiplier on pi/(50 gap^2)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--seed", sw_seed, "Base seed")->capture_default_str();
  sweep->add_option("--max-n", sw_max_n, "Largest n accepted")->capture_default_str();
  sweep->add_option("--frame", sw_frame, "lab or rotating")
      ->check(CLI::IsMember({"lab", "rotating"}))
      ->capture_default_str();
  sweep->add_option("--fidelity-threshold", sw_fid, "Pass if ground fidelity is at least this")
      ->capture_default_str();
  sweep->add_option("--trivial-threshold", sw_triv, "Pass if trivial probability is at most this")
      ->capture_default_str();
  sweep->add_option("-j,--parallelism", sw_j, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--out", sw_out, "Output directory (default $Q2SAT_OUT_DIR or runs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      InstancePtr inst = gen_src.load();
      if (gen_out == "-") {
        char* text = nullptr;
        check(q2s_instance_to_json(inst.get(), &text));
        OwnedString owned(text);
        std::cout << text;
      } else {
        check(q2s_instance_write(inst.get(), gen_out.c_str()));
      }
    } else if (*spectrum) {
      InstancePtr inst = spec_src.load();
      SpectrumPtr spec = spec_flags.compute(inst.get(), false);
      char* text = nullptr;
      check(q2s_spectrum_report_json(spec.get(), spec_timing, &text));
      OwnedString owned(text);
      emit(text, spec_out);
    } else if (*evolve) {
      InstancePtr inst = ev_src.load();
      SpectrumPtr spec = ev_flags.compute(inst.get(), true);
      q2s_evolve_options o;
      q2s_evolve_options_init(&o);
      o.multiplier = ev_mult;
      o.total_time = ev_T;
      const auto axis = parse_axis(ev_axis);
      for (int i = 0; i < 3; ++i) o.axis[i] = axis[static_cast<std::size_t>(i)];
      o.direction = ev_dir;
      o.steps = ev_steps;
      o.enforce_step_rule = !ev_allow_few;
      o.checkpoints = ev_ck;
      o.max_norm_drift = ev_drift;
      o.frame = parse_frame(ev_frame);
      q2s_evolution* raw = nullptr;
      check(q2s_evolve(inst.get(), spec.get(), &o, &raw));
      EvolutionPtr ev(raw);
      char* text = nullptr;
      check(q2s_evolution_report_json(ev.get(), ev_timing, &text));
      OwnedString owned(text);
      emit(text, ev_out);
      if (!ev_ck_out.empty()) {
        char* csv = nullptr;
        check(q2s_evolution_checkpoints_csv(ev.get(), &csv));
        OwnedString owned_csv(csv);
        emit(csv, ev_ck_out);
      }
    } else if (*holo) {
      InstancePtr inst = ho_src.load();
      SpectrumPtr spec = ho_flags.compute(inst.get(), true);
      q2s_holonomy_options o;
      q2s_holonomy_options_init(&o);
      o.total_time = ho_T;
      const auto axis = parse_axis(ho_axis);
      for (int i = 0; i < 3; ++i) o.axis[i] = axis[static_cast<std::size_t>(i)];
      o.direction = ho_dir;
      o.convention = ho_conv == "reversed" ? Q2S_GAUGE_REVERSED : Q2S_GAUGE_STANDARD;
      o.path_steps = ho_path;
      o.cross_check_frame = ho_check == "none" ? -1 : (ho_check == "lab" ? Q2S_FRAME_LAB : Q2S_FRAME_ROTATING);
      q2s_holonomy* raw = nullptr;
      check(q2s_holonomy_compute(inst.get(), spec.get(), &o, &raw));
      HolonomyPtr hol(raw);
      char* text = nullptr;
      check(q2s_holonomy_report_json(hol.get(), &text));
      OwnedString owned(text);
      emit(text, ho_out);
    } else if (*chain) {
      const std::vector<int> ns = parse_int_list(ch_n);
      const std::vector<double> betas = parse_double_list(ch_beta);
      char* csv = nullptr;
      double exponent = 0.0;
      check(q2s_chain_table(ns.data(), static_cast<int>(ns.size()), betas.data(),
                            static_cast<int>(betas.size()), ch_boundary == "periodic", ch_delta,
                            &csv, &exponent));
      OwnedString owned(csv);
      emit(csv, ch_out);
      if (ns.size() >= 2) std::fprintf(stderr, "gap exponent (first beta): %.6f\n", exponent);
    } else if (*scaling) {
      const std::vector<int> ns = parse_int_list(sc_n);
      std::vector<int> counts(ns.size(), sc_samples);
      q2s_scaling_config c;
      q2s_scaling_config_init(&c);
      c.n_values = ns.data();
      c.count = static_cast<int>(ns.size());
      c.samples = sc_samples > 0 ? counts.data() : nullptr;
      c.full = sc_full;
      c.d = sc_d;
      c.clause = {sc_beta_re, sc_beta_im, sc_delta};
      c.base_seed = sc_seed;
      c.parallelism = sc_j;
      c.min_gap = sc_min_gap;
      const std::string dir = sc_out.empty() ? default_out_dir() : sc_out;
      q2s_scaling_fit fit;
      check(q2s_run_scaling(&c, dir.c_str(), &fit));
      if (fit.has_fit)
        std::fprintf(stderr, "slope %.6f intercept %.6f r %.6f (%d samples, %d excluded) -> %s\n",
                     fit.slope, fit.intercept, fit.correlation_r, fit.samples, fit.exclusions, dir.c_str());
      else
        std::fprintf(stderr, "no fit: fewer than two usable n values (%d excluded) -> %s\n",
                     fit.exclusions, dir.c_str());
    } else if (*hist) {
      q2s_histogram_config c;
      q2s_histogram_config_init(&c);
      c.n = hi_n;
      c.samples = hi_samples;
      c.d = hi_d;
      c.bin_width = hi_width;
      c.base_seed = hi_seed;
      c.min_gap = hi_min_gap;
      c.parallelism = hi_j;
      const std::string dir = hi_out.empty() ? default_out_dir() : hi_out;
      q2s_histogram_summary s;
      check(q2s_run_histogram(&c, dir.c_str(), &s));
      std::fprintf(stderr, "n=%d: %llu samples, mean %.6g, median %.6g, mode (%.3g, %.3g] -> %s\n", hi_n,
                   static_cast<unsigned long long>(s.count), s.mean, s.median, s.modal_lo, s.modal_hi,
                   dir.c_str());
    } else if (*sweep) {
      const std::vector<int> ns = parse_int_list(sw_n);
      q2s_sweep_config c;
      q2s_sweep_config_init(&c);
      c.n_values = ns.data();
      c.count = static_cast<int>(ns.size());
      c.samples = sw_samples;
      c.d = sw_d;
      c.multiplier = sw_mult;
      c.base_seed = sw_seed;
      c.parallelism = sw_j;
      c.max_n = sw_max_n;
      c.frame = parse_frame(sw_frame);
      c.fidelity_threshold = sw_fid;
      c.trivial_threshold = sw_triv;
      const std::string dir = sw_out.empty() ? default_out_dir() : sw_out;
      q2s_sweep_totals t;
      check(q2s_run_sweep(&c, dir.c_str(), &t));
      std::fprintf(stderr, "%d of %d instances pass (%.3f) -> %s\n", t.passing, t.count,
                   t.pass_fraction, dir.c_str());
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error (%s): %s\n", q2s_status_name(f.status), f.message.c_str());
    return exit_code(f.status);
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitOk;
}
