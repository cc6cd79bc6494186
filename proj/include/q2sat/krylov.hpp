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

#include <functional>

#include "q2sat/hamiltonian.hpp"

namespace q2sat {

/// out = G * in for a Hermitian generator G.
using LinearOperator = std::function<void(const StateVector& in, StateVector& out)>;

struct KrylovOptions {
  int krylov_dim = 40;
  /// Target error of the whole propagation, relative to the input norm.
  double tolerance = 1e-12;
  /// Upper bound on ||G||; it only sets the first substep guess.
  double norm_estimate = 1.0;
};

struct KrylovStats {
  int substeps = 0;
  int operator_applications = 0;
  double error_estimate = 0.0;
};

/// exp(-i * tau * G) v by Lanczos projection with adaptive substeps. The
/// Krylov basis of each substep is built once; the substep length is then
/// shrunk on that basis until the a-posteriori estimate meets the budget.
StateVector expm_multiply_hermitian(const LinearOperator& g, const StateVector& v, double tau,
                                    const KrylovOptions& options = {},
                                    KrylovStats* stats = nullptr);

}  // namespace q2sat
