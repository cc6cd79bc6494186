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


#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "q2sat/dynamics.hpp"
#include "q2sat/instance.hpp"
#include "q2sat/spectrum.hpp"
#include "q2sat/stats.hpp"

namespace q2sat {

/// Desk-scale sample count per n (500 / 100 / 30), or the long-run counts
/// (10000 / 1000 / 100) when `full` is set.
int default_sample_count(int n, bool full);

struct ScalingConfig {
  std::vector<int> n_values;
  /// One count per entry of n_values.
  std::vector<int> samples;
  double d = 0.1;
  ClauseParams clause;
  std::uint64_t base_seed = 1;
  int parallelism = 1;
  /// Gaps below this (in units of delta) are excluded from the statistics.
  double min_gap = 1e-7;
  SpectrumOptions spectrum;
};

struct ScalingSample {
  int n = 0;
  std::uint64_t seed = 0;
  int m = 0;
  std::optional<double> gap;
  double inv_sq_gap = 0.0;
  std::uint64_t degeneracy = 0;
  bool ambiguous = false;
  /// Empty when the sample enters the statistics.
  std::string exclusion;
};

struct ScalingRecord {
  int n = 0;
  int sample_count = 0;
  int included_count = 0;
  int excluded_count = 0;
  /// Arithmetic mean of 1/delta^2 over included samples (NaN if none).
  double mean_inv_sq_gap = 0.0;
  double median_inv_sq_gap = 0.0;
  double stderr_inv_sq_gap = 0.0;
  std::vector<ScalingSample> samples;

  std::vector<double> included_values() const;
};

/// Instance seeds are base_seed + index for every n. The result does not
/// depend on `parallelism`.
std::vector<ScalingRecord> run_scaling(const ScalingConfig& config);

/// Least squares of ln(mean 1/delta^2) against ln(n), unweighted, over
/// records with at least one included sample.
FitResult fit_loglog(const std::vector<ScalingRecord>& records);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
};

/// Right-closed bins (k w, (k+1) w] covering the sample range, including
/// empty bins in between. Empty input gives an empty histogram.
std::vector<HistogramBin> histogram_inv_sq_gap(std::span<const double> samples, double bin_width);

struct HistogramSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  HistogramBin modal;
  /// median < mean and the modal bin lies below the mean.
  bool right_skewed = false;
};

HistogramSummary summarize_histogram(std::span<const double> samples,
                                     const std::vector<HistogramBin>& bins);

struct SweepConfig {
  std::vector<int> n_values;
  int samples = 50;
  double d = 0.1;
  double multiplier = 1.0;
  ClauseParams clause;
  std::uint64_t base_seed = 1;
  int parallelism = 1;
  int max_n = 14;
  Frame frame = Frame::Lab;
  EvolveOptions evolve;
  SpectrumOptions spectrum;
  double fidelity_threshold = 0.9;
  double trivial_threshold = 0.9;
};

struct SweepRow {
  int n = 0;
  std::uint64_t seed = 0;
  int m = 0;
  /// Absent for edgeless instances, whose operator is zero.
  std::optional<double> gap;
  double total_time = 0.0;
  std::int64_t steps = 0;
  double ground_fidelity = 0.0;
  double trivial_probability = 0.0;
  std::uint64_t degeneracy = 0;
  double norm_drift = 0.0;
};

struct SweepSummary {
  int n = 0;
  int count = 0;
  double mean_trivial_probability = 0.0;
  double mean_ground_fidelity = 0.0;
  /// Instances with fidelity >= threshold and trivial probability <= threshold.
  int passing = 0;
  double pass_fraction = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepSummary> summaries;
};

/// spectrum -> T = multiplier pi / (50 delta^2) -> evolve from |0...0>.
/// Edgeless instances are recorded with T = 0, fidelity 1 and trivial
/// probability 1 without evolving.
SweepResult run_dynamics_sweep(const SweepConfig& config);

void write_scaling_csv(const std::vector<ScalingRecord>& records, std::ostream& os);
std::string scaling_fit_json(const std::vector<ScalingRecord>& records, const ScalingConfig& config);
/// Columns: ln n, ln mean, n, mean, standard error.
void write_scaling_plot(const std::vector<ScalingRecord>& records, std::ostream& os);
void write_histogram_csv(const std::vector<HistogramBin>& bins, std::ostream& os);
/// Columns: bin centre, count.
void write_histogram_plot(const std::vector<HistogramBin>& bins, std::ostream& os);
std::string histogram_json(int n, const HistogramSummary& summary, double bin_width);
void write_dynamics_csv(const SweepResult& result, std::ostream& os);
/// Columns: n, mean trivial probability, mean ground fidelity, pass fraction.
void write_dynamics_plot(const SweepResult& result, std::ostream& os);
std::string sweep_summary_json(const SweepResult& result, const SweepConfig& config);

/// "%.17g".
std::string format_double(double x);

}  // namespace q2sat
