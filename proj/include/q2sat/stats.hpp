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

#include <span>

namespace q2sat {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  /// Pearson correlation of x and y.
  double correlation_r = 0.0;
  int points = 0;
};

/// Ordinary least squares y = slope * x + intercept. Needs two distinct x.
FitResult fit_line(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> v);
/// Average of the two middle order statistics for even sizes.
double median(std::span<const double> v);
/// Sample standard error of the mean; 0 for fewer than two values.
double standard_error(std::span<const double> v);

}  // namespace q2sat
