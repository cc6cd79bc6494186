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
#include <string>

#include <Eigen/Dense>

#include "q2sat/hamiltonian.hpp"
#include "q2sat/spectrum.hpp"

namespace q2sat {

/// Sign of the gauge matrix. Standard reproduces the Schrodinger evolution
/// in the slow-rotation limit; Reversed is the opposite sign, kept for
/// comparison.
enum class GaugeConvention { Standard, Reversed };

std::string to_string(GaugeConvention convention);

/// A_kl = i <psi_l(t)| d/dt |psi_k(t)> for the rotated frame
/// psi_k(t) = W(t) psi_k. The rotation is uniform, so A is constant:
/// A_kl = -w <psi_l| S_n |psi_k> with w the angular velocity (Standard).
/// Throws ParameterError when the basis is not orthonormal to 1e-10.
Eigen::MatrixXcd gauge_matrix(const GroundBasis& basis, const RotationSchedule& sched,
                              GaugeConvention convention = GaugeConvention::Standard);

/// Normalized generator from the balanced-clause special case:
/// ( i pi / T ) <psi_l| sum_a (s+_a - s-_a) |psi_k>.
Eigen::MatrixXcd raising_lowering_gauge(const GroundBasis& basis, double total_time);

struct GaugeHolonomy {
  Eigen::MatrixXcd gauge;  // A at t = 0
  Eigen::MatrixXcd holonomy;
  int steps = 0;
  double unitarity_error = 0.0;
};

/// Path-ordered product of midpoint propagators exp(i A(t_j) dt). Later
/// factors multiply from the right, matching final coefficients U^T c.
Eigen::MatrixXcd holonomy(const std::function<Eigen::MatrixXcd(double)>& gauge_at,
                          double total_time, int steps);

/// exp(i A T) for a constant Hermitian A (via its eigendecomposition).
Eigen::MatrixXcd holonomy(const Eigen::MatrixXcd& gauge, double total_time);

/// Bundles the gauge matrix, holonomy and unitarity check for an instance.
GaugeHolonomy compute_holonomy(const GroundBasis& basis, const RotationSchedule& sched,
                               GaugeConvention convention = GaugeConvention::Standard,
                               int steps = 1);

/// ||U^dagger U - I|| (max absolute entry).
double unitarity_error(const Eigen::MatrixXcd& u);

/// sum_kl c_k U_kl psi_l with c_k = <psi_k|psi0>, normalized. Throws when
/// psi0 leaves the ground space by more than 1e-8.
StateVector predict_final_state(const Eigen::MatrixXcd& u, const StateVector& psi0,
                                const GroundBasis& basis);

}  // namespace q2sat
