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
#include <string>
#include <vector>

#include "q2sat/hamiltonian.hpp"
#include "q2sat/spectrum.hpp"

namespace q2sat {

enum class Frame { Lab, Rotating };

std::string to_string(Frame frame);

/// T = multiplier * pi / (50 delta^2) about the y axis.
RotationSchedule schedule_from_gap(double delta, double multiplier = 1.0);

/// Smallest RK4 step count accepted by default:
/// ceil(max(2000, 20 T norm_bound + 40 pi n)).
std::int64_t min_rk4_steps(double total_time, double norm_bound, int n_qubits);

struct Measurement {
  /// |<psi_k|psi>|^2 per ground basis vector, in basis order.
  std::vector<double> probabilities;
  double ground_fidelity = 0.0;
  /// |<0...0|psi>|^2 + |<1...1|psi>|^2.
  double trivial_probability = 0.0;
  double probability_all_zero = 0.0;
  double probability_all_one = 0.0;
};

/// Probabilities on an orthonormal ground basis, plus the weight on the two
/// computational trivial states (independent of how the basis is rotated).
Measurement measure_against_basis(const StateVector& psi, const GroundBasis& basis);

struct Checkpoint {
  double time = 0.0;
  double norm = 0.0;
  /// <psi|H(t)|psi>.
  double energy = 0.0;
  /// Weight of psi(t) on the rotated ground space W(t) span{psi_k}.
  double ground_fidelity = 0.0;
  double leakage = 0.0;
};

struct EvolveOptions {
  /// Fixed RK4 step count; 0 selects min_rk4_steps.
  std::int64_t steps = 0;
  /// Reject step counts below min_rk4_steps. Convergence studies turn this off.
  bool enforce_step_rule = true;
  /// Number of evenly spaced diagnostic rows, excluding t = 0.
  int checkpoints = 0;
  /// Largest accepted | ||psi(T)|| - 1 |.
  double max_norm_drift = 1e-4;
  /// Rotating frame only.
  double krylov_tolerance = 1e-12;
  int krylov_dim = 40;
};

struct EvolutionResult {
  StateVector final_state;
  Measurement measurement;
  RotationSchedule schedule;
  std::int64_t steps = 0;
  Frame frame = Frame::Lab;
  double norm_drift = 0.0;
  std::vector<Checkpoint> checkpoints;
  double wall_time_ms = 0.0;
};

/// Fixed-step classical RK4 for i dpsi/dt = W(t) H0 W(t)^dagger psi. The
/// state is never renormalized; the final state is measured against `basis`,
/// the ground basis of H0 = H(T).
EvolutionResult evolve_lab(const SparseHamiltonian& h0, const RotationSchedule& sched,
                           const StateVector& psi0, const GroundBasis& basis,
                           const EvolveOptions& options = {});

/// Same evolution computed as phi(T) = exp(-i T (H0 + w S_n)) psi0 with
/// psi(T) = W(T) phi(T), where w is the angular velocity and S_n the total
/// spin along the axis.
EvolutionResult evolve_rotating(const SparseHamiltonian& h0, const RotationSchedule& sched,
                                const StateVector& psi0, const GroundBasis& basis,
                                const EvolveOptions& options = {});

/// |<a|b>|^2 for unit vectors (no normalization applied).
double state_fidelity(const StateVector& a, const StateVector& b);

}  // namespace q2sat
