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


#include "q2sat/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "q2sat/error.hpp"
#include "q2sat/parallel.hpp"

namespace q2sat {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int default_sample_count(int n, bool full) {
  if (n < 2) throw ParameterError("sample count requested for n < 2");
  if (full) return n <= 11 ? 10000 : (n <= 14 ? 1000 : 100);
  return n <= 11 ? 500 : (n <= 13 ? 100 : 30);
}

std::vector<double> ScalingRecord::included_values() const {
  std::vector<double> v;
  for (const ScalingSample& s : samples)
    if (s.exclusion.empty()) v.push_back(s.inv_sq_gap);
  return v;
}

// -------------------------------------------------------------- scaling

std::vector<ScalingRecord> run_scaling(const ScalingConfig& config) {
  if (config.n_values.empty()) throw ParameterError("run_scaling: no n values");
  if (config.samples.size() != config.n_values.size())
    throw ParameterError("run_scaling: one sample count per n is required");
  if (!(config.d >= 0.0 && config.d <= 1.0)) throw ParameterError("run_scaling: d outside [0, 1]");
  config.clause.validate();

  struct Task {
    std::size_t record;
    std::uint64_t index;
  };
  std::vector<Task> tasks;
  std::vector<ScalingRecord> records(config.n_values.size());
  for (std::size_t r = 0; r < config.n_values.size(); ++r) {
    if (config.samples[r] < 1) throw ParameterError("run_scaling: sample count must be >= 1");
    records[r].n = config.n_values[r];
    records[r].sample_count = config.samples[r];
    records[r].samples.resize(static_cast<std::size_t>(config.samples[r]));
    for (int i = 0; i < config.samples[r]; ++i) tasks.push_back({r, static_cast<std::uint64_t>(i)});
  }

  SpectrumOptions opts = config.spectrum;
  opts.keep_basis = false;
  opts.parallelism = 1;
  const double floor = config.min_gap * config.clause.delta;

  parallel_for(tasks.size(), config.parallelism, [&](std::size_t t) {
    const Task& task = tasks[t];
    ScalingSample& s = records[task.record].samples[task.index];
    s.n = records[task.record].n;
    s.seed = config.base_seed + task.index;
    const Q2SATInstance inst = generate_instance(s.n, config.d, config.clause, s.seed);
    s.m = inst.m();
    if (s.m == 0) {
      s.exclusion = "no_edges";
      return;
    }
    try {
      const SpectrumResult res = ground_and_gap(build_h0(inst), opts);
      s.gap = res.gap_delta;
      s.degeneracy = res.degeneracy;
      s.ambiguous = res.ambiguous;
      if (!res.gap_delta || *res.gap_delta < floor) {
        s.exclusion = "gap_below_threshold";
        return;
      }
      s.inv_sq_gap = inverse_square_gap(res);
    } catch (const NumericalError&) {
      s.exclusion = "solver_failure";
    }
  });

  for (ScalingRecord& rec : records) {
    const std::vector<double> v = rec.included_values();
    rec.included_count = static_cast<int>(v.size());
    rec.excluded_count = rec.sample_count - rec.included_count;
    if (v.empty()) {
      rec.mean_inv_sq_gap = rec.median_inv_sq_gap = std::numeric_limits<double>::quiet_NaN();
    } else {
      rec.mean_inv_sq_gap = mean(v);
      rec.median_inv_sq_gap = median(v);
      rec.stderr_inv_sq_gap = standard_error(v);
    }
  }
  return records;
}

FitResult fit_loglog(const std::vector<ScalingRecord>& records) {
  std::vector<double> x, y;
  for (const ScalingRecord& r : records)
    if (r.included_count > 0) {
      x.push_back(std::log(static_cast<double>(r.n)));
      y.push_back(std::log(r.mean_inv_sq_gap));
    }
  if (x.size() < 2) throw ParameterError("fit_loglog: fewer than two usable n values");
  return fit_line(x, y);
}

// ------------------------------------------------------------ histogram

std::vector<HistogramBin> histogram_inv_sq_gap(std::span<const double> samples, double bin_width) {
  if (!(bin_width > 0.0)) throw ParameterError("histogram: bin width must be positive");
  std::vector<HistogramBin> bins;
  if (samples.empty()) return bins;
  auto bin_of = [&](double x) {
    auto k = static_cast<std::int64_t>(std::ceil(x / bin_width)) - 1;
    // Guard the division against rounding at the edges.
    while (x <= static_cast<double>(k) * bin_width) --k;
    while (x > static_cast<double>(k + 1) * bin_width) ++k;
    return k;
  };
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (double x : samples) {
    if (!std::isfinite(x)) throw ParameterError("histogram: non-finite sample");
    const auto k = bin_of(x);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  bins.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) {
    HistogramBin& b = bins[static_cast<std::size_t>(k - lo)];
    b.lo = static_cast<double>(k) * bin_width;
    b.hi = static_cast<double>(k + 1) * bin_width;
  }
  for (double x : samples) ++bins[static_cast<std::size_t>(bin_of(x) - lo)].count;
  return bins;
}

HistogramSummary summarize_histogram(std::span<const double> samples,
                                     const std::vector<HistogramBin>& bins) {
  HistogramSummary s;
  s.count = samples.size();
  if (samples.empty()) return s;
  s.mean = mean(samples);
  s.median = median(samples);
  for (const HistogramBin& b : bins)
    if (b.count > s.modal.count) s.modal = b;
  s.right_skewed = s.median < s.mean && s.modal.hi <= s.mean;
  return s;
}

// ---------------------------------------------------------------- sweep

SweepResult run_dynamics_sweep(const SweepConfig& config) {
  if (config.n_values.empty()) throw ParameterError("sweep: no n values");
  if (config.samples < 1) throw ParameterError("sweep: sample count must be >= 1");
  for (int n : config.n_values)
    if (n > config.max_n)
      throw ParameterError("sweep: n = " + std::to_string(n) + " exceeds the dynamics cap " +
                           std::to_string(config.max_n));
  config.clause.validate();

  SweepResult out;
  for (int n : config.n_values)
    for (int i = 0; i < config.samples; ++i) {
      SweepRow row;
      row.n = n;
      row.seed = config.base_seed + static_cast<std::uint64_t>(i);
      out.rows.push_back(row);
    }

  SpectrumOptions sopts = config.spectrum;
  sopts.keep_basis = true;
  sopts.parallelism = 1;

  parallel_for(out.rows.size(), config.parallelism, [&](std::size_t t) {
    SweepRow& row = out.rows[t];
    const Q2SATInstance inst = generate_instance(row.n, config.d, config.clause, row.seed);
    row.m = inst.m();
    if (row.m == 0) {
      row.ground_fidelity = 1.0;
      row.trivial_probability = 1.0;
      row.degeneracy = std::uint64_t{1} << row.n;
      return;
    }
    const std::string who = "sweep instance n=" + std::to_string(row.n) +
                            " seed=" + std::to_string(row.seed) + ": ";
    try {
      const SparseHamiltonian h0 = build_h0(inst);
      const SpectrumResult spec = ground_and_gap(h0, sopts);
      row.degeneracy = spec.degeneracy;
      if (!spec.gap_delta || *spec.gap_delta < 1e-7 * config.clause.delta)
        throw NumericalError("gap too small to set a schedule");
      row.gap = spec.gap_delta;
      const RotationSchedule sched = schedule_from_gap(*spec.gap_delta, config.multiplier);
      row.total_time = sched.total_time;
      const StateVector psi0 = basis_state(row.n, 0);
      const EvolutionResult ev =
          config.frame == Frame::Lab
              ? evolve_lab(h0, sched, psi0, spec.ground_basis, config.evolve)
              : evolve_rotating(h0, sched, psi0, spec.ground_basis, config.evolve);
      row.steps = ev.steps;
      row.ground_fidelity = ev.measurement.ground_fidelity;
      row.trivial_probability = ev.measurement.trivial_probability;
      row.norm_drift = ev.norm_drift;
    } catch (const NumericalError& e) {
      throw NumericalError(who + e.what(), e.residuals());
    } catch (const ParameterError& e) {
      throw ParameterError(who + e.what());
    }
  });

  for (int n : config.n_values) {
    SweepSummary s;
    s.n = n;
    for (const SweepRow& r : out.rows) {
      if (r.n != n) continue;
      ++s.count;
      s.mean_trivial_probability += r.trivial_probability;
      s.mean_ground_fidelity += r.ground_fidelity;
      if (r.ground_fidelity >= config.fidelity_threshold &&
          r.trivial_probability <= config.trivial_threshold)
        ++s.passing;
    }
    s.mean_trivial_probability /= s.count;
    s.mean_ground_fidelity /= s.count;
    s.pass_fraction = static_cast<double>(s.passing) / s.count;
    out.summaries.push_back(s);
  }
  return out;
}

// -------------------------------------------------------------- writers

void write_scaling_csv(const std::vector<ScalingRecord>& records, std::ostream& os) {
  os << "n,seed,m,gap,inv_sq_gap,degeneracy,status\n";
  for (const ScalingRecord& r : records)
    for (const ScalingSample& s : r.samples) {
      os << s.n << ',' << s.seed << ',' << s.m << ',' << (s.gap ? format_double(*s.gap) : "")
         << ',' << (s.exclusion.empty() ? format_double(s.inv_sq_gap) : "") << ','
         << s.degeneracy << ',' << (s.exclusion.empty() ? (s.ambiguous ? "ambiguous" : "ok") : s.exclusion)
         << '\n';
    }
}

std::string scaling_fit_json(const std::vector<ScalingRecord>& records, const ScalingConfig& config) {
  json j;
  int total = 0, excluded = 0;
  json points = json::array();
  for (const ScalingRecord& r : records) {
    total += r.sample_count;
    excluded += r.excluded_count;
    json p;
    p["n"] = r.n;
    p["samples"] = r.sample_count;
    p["included"] = r.included_count;
    p["excluded"] = r.excluded_count;
    p["mean_inv_sq_gap"] = r.mean_inv_sq_gap;
    p["median_inv_sq_gap"] = r.median_inv_sq_gap;
    p["stderr_inv_sq_gap"] = r.stderr_inv_sq_gap;
    points.push_back(p);
  }
  try {
    const FitResult f = fit_loglog(records);
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["r"] = f.correlation_r;
    j["fit_points"] = f.points;
  } catch (const ParameterError&) {
    j["slope"] = nullptr;
    j["intercept"] = nullptr;
    j["r"] = nullptr;
    j["fit_points"] = 0;
  }
  j["log_base"] = "e";
  j["weighting"] = "unweighted";
  j["samples"] = total;
  j["exclusions"] = excluded;
  j["d"] = config.d;
  j["beta"] = {{"re", config.clause.beta.real()}, {"im", config.clause.beta.imag()}};
  j["delta"] = config.clause.delta;
  j["base_seed"] = config.base_seed;
  j["min_gap"] = config.min_gap;
  j["per_n"] = points;
  return j.dump(2) + "\n";
}

void write_scaling_plot(const std::vector<ScalingRecord>& records, std::ostream& os) {
  os << "# ln_n ln_mean_inv_sq_gap n mean_inv_sq_gap stderr\n";
  for (const ScalingRecord& r : records) {
    if (r.included_count == 0) continue;
    os << format_double(std::log(static_cast<double>(r.n))) << ' '
       << format_double(std::log(r.mean_inv_sq_gap)) << ' ' << r.n << ' '
       << format_double(r.mean_inv_sq_gap) << ' ' << format_double(r.stderr_inv_sq_gap) << '\n';
  }
}

void write_histogram_csv(const std::vector<HistogramBin>& bins, std::ostream& os) {
  os << "bin_lo,bin_hi,count\n";
  for (const HistogramBin& b : bins)
    os << format_double(b.lo) << ',' << format_double(b.hi) << ',' << b.count << '\n';
}

void write_histogram_plot(const std::vector<HistogramBin>& bins, std::ostream& os) {
  os << "# bin_centre count\n";
  for (const HistogramBin& b : bins)
    os << format_double(0.5 * (b.lo + b.hi)) << ' ' << b.count << '\n';
}

std::string histogram_json(int n, const HistogramSummary& s, double bin_width) {
  json j;
  j["n"] = n;
  j["count"] = s.count;
  j["bin_width"] = bin_width;
  j["mean"] = s.mean;
  j["median"] = s.median;
  j["modal_bin"] = {{"lo", s.modal.lo}, {"hi", s.modal.hi}, {"count", s.modal.count}};
  j["right_skewed"] = s.right_skewed;
  return j.dump(2) + "\n";
}

void write_dynamics_csv(const SweepResult& result, std::ostream& os) {
  os << "n,seed,T,steps,ground_fidelity,trivial_probability,m,gap,degeneracy,norm_drift\n";
  for (const SweepRow& r : result.rows)
    os << r.n << ',' << r.seed << ',' << format_double(r.total_time) << ',' << r.steps << ','
       << format_double(r.ground_fidelity) << ',' << format_double(r.trivial_probability) << ','
       << r.m << ',' << (r.gap ? format_double(*r.gap) : "") << ',' << r.degeneracy << ','
       << format_double(r.norm_drift) << '\n';
}

void write_dynamics_plot(const SweepResult& result, std::ostream& os) {
  os << "# n mean_trivial_probability mean_ground_fidelity pass_fraction\n";
  for (const SweepSummary& s : result.summaries)
    os << s.n << ' ' << format_double(s.mean_trivial_probability) << ' '
       << format_double(s.mean_ground_fidelity) << ' ' << format_double(s.pass_fraction) << '\n';
}

std::string sweep_summary_json(const SweepResult& result, const SweepConfig& config) {
  json j;
  j["d"] = config.d;
  j["multiplier"] = config.multiplier;
  j["frame"] = to_string(config.frame);
  j["base_seed"] = config.base_seed;
  j["fidelity_threshold"] = config.fidelity_threshold;
  j["trivial_threshold"] = config.trivial_threshold;
  json per = json::array();
  int count = 0, passing = 0;
  for (const SweepSummary& s : result.summaries) {
    per.push_back({{"n", s.n},
                   {"count", s.count},
                   {"mean_trivial_probability", s.mean_trivial_probability},
                   {"mean_ground_fidelity", s.mean_ground_fidelity},
                   {"passing", s.passing},
                   {"pass_fraction", s.pass_fraction}});
    count += s.count;
    passing += s.passing;
  }
  j["per_n"] = per;
  j["count"] = count;
  j["passing"] = passing;
  j["pass_fraction"] = count ? static_cast<double>(passing) / count : 0.0;
  return j.dump(2) + "\n";
}

}  // namespace q2sat
