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


#include "q2sat/dynamics.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "q2sat/error.hpp"
#include "q2sat/krylov.hpp"

namespace q2sat {

std::string to_string(Frame frame) { return frame == Frame::Lab ? "lab" : "rotating"; }

RotationSchedule schedule_from_gap(double delta, double multiplier) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("schedule_from_gap: gap must be positive");
  if (!(multiplier > 0.0) || !std::isfinite(multiplier))
    throw ParameterError("schedule_from_gap: multiplier must be positive");
  RotationSchedule s;
  s.axis = Eigen::Vector3d(0.0, 1.0, 0.0);
  s.total_time = multiplier * std::numbers::pi / (50.0 * delta * delta);
  return s;
}

std::int64_t min_rk4_steps(double total_time, double norm_bound, int n_qubits) {
  const double need = std::max(2000.0, 20.0 * total_time * norm_bound +
                                           20.0 * 2.0 * std::numbers::pi * n_qubits);
  return static_cast<std::int64_t>(std::ceil(need));
}

Measurement measure_against_basis(const StateVector& psi, const GroundBasis& basis) {
  if (psi.size() != (Eigen::Index{1} << basis.n_qubits()))
    throw ParameterError("measure_against_basis: state dimension does not match basis");
  Measurement m;
  const Eigen::VectorXcd c = basis.coefficients(psi);
  m.probabilities.resize(static_cast<std::size_t>(c.size()));
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    m.probabilities[static_cast<std::size_t>(k)] = std::norm(c[k]);
    m.ground_fidelity += std::norm(c[k]);
  }
  m.probability_all_zero = std::norm(psi[0]);
  m.probability_all_one = std::norm(psi[psi.size() - 1]);
  m.trivial_probability = m.probability_all_zero + m.probability_all_one;
  return m;
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ParameterError("state_fidelity: dimension mismatch");
  return std::norm(a.dot(b));
}

namespace {

void check_inputs(const SparseHamiltonian& h0, const RotationSchedule& sched,
                  const StateVector& psi0, const GroundBasis& basis) {
  sched.validate();
  if (psi0.size() != static_cast<Eigen::Index>(h0.dimension()))
    throw ParameterError("evolve: initial state dimension does not match operator");
  if (basis.n_qubits() != h0.n_qubits())
    throw ParameterError("evolve: ground basis belongs to a different qubit count");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw ParameterError("evolve: initial state must be normalized");
}

Checkpoint diagnose(const SparseHamiltonian& h0, const RotationSchedule& sched,
                    const GroundBasis& basis, double t, const StateVector& psi) {
  const Eigen::Matrix2cd w = single_qubit_rotation(sched.axis, sched.angle(t));
  StateVector hpsi, scratch;
  apply_rotated(h0, w, psi, hpsi, scratch);
  Checkpoint c;
  c.time = t;
  c.norm = psi.norm();
  c.energy = psi.dot(hpsi).real();
  // scratch holds W(t)^dagger psi, the state expressed in the t = 0 frame.
  const Eigen::VectorXcd coeff = basis.coefficients(scratch);
  c.ground_fidelity = coeff.squaredNorm();
  c.leakage = std::max(0.0, c.norm * c.norm - c.ground_fidelity);
  return c;
}

std::vector<std::int64_t> checkpoint_steps(std::int64_t steps, int count) {
  std::vector<std::int64_t> at;
  for (int j = 1; j <= count; ++j)
    at.push_back((steps * j + count - 1) / count);
  return at;
}

void finish(EvolutionResult& r, const GroundBasis& basis, const EvolveOptions& options,
            std::chrono::steady_clock::time_point start) {
  r.norm_drift = std::abs(r.final_state.norm() - 1.0);
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!(r.norm_drift <= options.max_norm_drift))
    throw NumericalError("evolve: norm drift " + std::to_string(r.norm_drift) +
                         " exceeds the limit " + std::to_string(options.max_norm_drift) +
                         "; increase the step count");
  r.measurement = measure_against_basis(r.final_state, basis);
}

}  // namespace

EvolutionResult evolve_lab(const SparseHamiltonian& h0, const RotationSchedule& sched,
                           const StateVector& psi0, const GroundBasis& basis,
                           const EvolveOptions& options) {
  check_inputs(h0, sched, psi0, basis);
  const auto start = std::chrono::steady_clock::now();
  const double total = sched.total_time;
  const std::int64_t rule = min_rk4_steps(total, h0.norm_bound(), h0.n_qubits());
  const std::int64_t steps = options.steps > 0 ? options.steps : rule;
  if (options.enforce_step_rule && steps < rule)
    throw ParameterError("evolve_lab: " + std::to_string(steps) +
                         " steps is below the minimum " + std::to_string(rule));

  EvolutionResult r;
  r.schedule = sched;
  r.steps = steps;
  r.frame = Frame::Lab;

  const double dt = total / static_cast<double>(steps);
  const cplx minus_i(0.0, -1.0);
  const std::vector<std::int64_t> marks = checkpoint_steps(steps, std::max(options.checkpoints, 0));
  std::size_t next_mark = 0;

  StateVector psi = psi0;
  StateVector k1, k2, k3, k4, tmp, scratch;
  auto rhs = [&](double t, const StateVector& x, StateVector& out) {
    const Eigen::Matrix2cd w = single_qubit_rotation(sched.axis, sched.angle(t));
    apply_rotated(h0, w, x, out, scratch);
    out *= minus_i;
  };
  if (options.checkpoints > 0) r.checkpoints.push_back(diagnose(h0, sched, basis, 0.0, psi));
  for (std::int64_t s = 0; s < steps; ++s) {
    const double t = total * static_cast<double>(s) / static_cast<double>(steps);
    rhs(t, psi, k1);
    tmp = psi + (0.5 * dt) * k1;
    rhs(t + 0.5 * dt, tmp, k2);
    tmp = psi + (0.5 * dt) * k2;
    rhs(t + 0.5 * dt, tmp, k3);
    tmp = psi + dt * k3;
    rhs(std::min(t + dt, total), tmp, k4);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    while (next_mark < marks.size() && marks[next_mark] == s + 1) {
      const double tc = total * static_cast<double>(s + 1) / static_cast<double>(steps);
      r.checkpoints.push_back(diagnose(h0, sched, basis, tc, psi));
      ++next_mark;
    }
  }
  r.final_state = std::move(psi);
  finish(r, basis, options, start);
  return r;
}

EvolutionResult evolve_rotating(const SparseHamiltonian& h0, const RotationSchedule& sched,
                                const StateVector& psi0, const GroundBasis& basis,
                                const EvolveOptions& options) {
  check_inputs(h0, sched, psi0, basis);
  const auto start = std::chrono::steady_clock::now();
  const double total = sched.total_time;
  const double omega = sched.angular_velocity();
  const int n = h0.n_qubits();

  EvolutionResult r;
  r.schedule = sched;
  r.frame = Frame::Rotating;

  StateVector spin;
  LinearOperator generator = [&](const StateVector& in, StateVector& out) {
    apply_into(h0, in, out);
    apply_total_spin(sched.axis, n, in, spin);
    out += omega * spin;
  };
  KrylovOptions ko;
  ko.krylov_dim = options.krylov_dim;
  ko.norm_estimate = h0.norm_bound() + std::abs(omega) * 0.5 * n;

  const int segments = std::max(options.checkpoints, 1);
  ko.tolerance = options.krylov_tolerance / segments;
  StateVector phi = psi0;
  if (options.checkpoints > 0) r.checkpoints.push_back(diagnose(h0, sched, basis, 0.0, psi0));
  double t_prev = 0.0;
  for (int j = 1; j <= segments; ++j) {
    const double t = (j == segments) ? total : total * j / segments;
    KrylovStats stats;
    phi = expm_multiply_hermitian(generator, phi, t - t_prev, ko, &stats);
    r.steps += stats.substeps;
    t_prev = t;
    if (options.checkpoints > 0) {
      StateVector psi = phi;
      apply_all_qubits(single_qubit_rotation(sched.axis, sched.angle(t)), n, psi);
      r.checkpoints.push_back(diagnose(h0, sched, basis, t, psi));
    }
  }
  apply_all_qubits(single_qubit_rotation(sched.axis, sched.angle(total)), n, phi);
  r.final_state = std::move(phi);
  finish(r, basis, options, start);
  return r;
}

}  // namespace q2sat
