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


#include "q2sat/holonomy.hpp"

#include <cmath>
#include <numbers>

#include "q2sat/error.hpp"

namespace q2sat {

std::string to_string(GaugeConvention convention) {
  return convention == GaugeConvention::Standard ? "standard" : "reversed";
}

namespace {

void require_orthonormal(const GroundBasis& basis) {
  if (basis.empty()) throw ParameterError("gauge_matrix: empty ground basis");
  const double err = basis.orthonormality_error();
  if (err > 1e-10)
    throw ParameterError("gauge_matrix: ground basis is not orthonormal (error " +
                         std::to_string(err) + ")");
}

// M_lk = <psi_l| O |psi_k> for an operator given by its action.
template <typename Apply>
Eigen::MatrixXcd matrix_elements(const GroundBasis& basis, Apply&& op) {
  const auto g = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(g, g);
  StateVector out;
  for (Eigen::Index k = 0; k < g; ++k) {
    op(basis.vector(static_cast<std::size_t>(k)), out);
    m.col(k) = basis.coefficients(out);
  }
  return m;
}

Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd& a, double t) {
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success) throw NumericalError("holonomy: eigensolver failed");
  Eigen::VectorXcd phase(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    phase[i] = std::exp(cplx(0.0, t * eig.eigenvalues()[i]));
  return eig.eigenvectors() * phase.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXcd gauge_matrix(const GroundBasis& basis, const RotationSchedule& sched,
                              GaugeConvention convention) {
  sched.validate();
  require_orthonormal(basis);
  const int n = basis.n_qubits();
  const Eigen::MatrixXcd m = matrix_elements(basis, [&](const StateVector& v, StateVector& out) {
    apply_total_spin(sched.axis, n, v, out);
  });
  const double sign = convention == GaugeConvention::Standard ? -1.0 : 1.0;
  Eigen::MatrixXcd a = sign * sched.angular_velocity() * m.transpose();
  return 0.5 * (a + a.adjoint());
}

Eigen::MatrixXcd raising_lowering_gauge(const GroundBasis& basis, double total_time) {
  if (!(total_time > 0.0)) throw ParameterError("raising_lowering_gauge: T must be positive");
  require_orthonormal(basis);
  const int n = basis.n_qubits();
  const auto m = matrix_elements(basis, [&](const StateVector& v, StateVector& out) {
    // sum_a (s+_a - s-_a); s+ maps |1> (down) to |0> (up).
    out.setZero(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      for (int q = 0; q < n; ++q) {
        const Eigen::Index bit = Eigen::Index{1} << q;
        if (i & bit)
          out[i ^ bit] += v[i];
        else
          out[i ^ bit] -= v[i];
      }
  });
  return cplx(0.0, std::numbers::pi / total_time) * m.transpose();
}

Eigen::MatrixXcd holonomy(const std::function<Eigen::MatrixXcd(double)>& gauge_at,
                          double total_time, int steps) {
  if (steps < 1) throw ParameterError("holonomy: steps must be at least 1");
  if (!(total_time > 0.0)) throw ParameterError("holonomy: T must be positive");
  const double dt = total_time / steps;
  Eigen::MatrixXcd u;
  for (int j = 0; j < steps; ++j) {
    const Eigen::MatrixXcd a = gauge_at((j + 0.5) * dt);
    const Eigen::MatrixXcd step = exp_i_hermitian(a, dt);
    u = (j == 0) ? step : Eigen::MatrixXcd(u * step);
  }
  return u;
}

Eigen::MatrixXcd holonomy(const Eigen::MatrixXcd& gauge, double total_time) {
  return exp_i_hermitian(gauge, total_time);
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

GaugeHolonomy compute_holonomy(const GroundBasis& basis, const RotationSchedule& sched,
                               GaugeConvention convention, int steps) {
  GaugeHolonomy h;
  h.gauge = gauge_matrix(basis, sched, convention);
  h.steps = steps;
  const Eigen::MatrixXcd a = h.gauge;
  h.holonomy = holonomy([&](double) { return a; }, sched.total_time, steps);
  h.unitarity_error = unitarity_error(h.holonomy);
  return h;
}

StateVector predict_final_state(const Eigen::MatrixXcd& u, const StateVector& psi0,
                                const GroundBasis& basis) {
  const auto g = static_cast<Eigen::Index>(basis.size());
  if (u.rows() != g || u.cols() != g)
    throw ParameterError("predict_final_state: holonomy size does not match the basis");
  const Eigen::VectorXcd c = basis.coefficients(psi0);
  const double residual = (psi0 - basis.combine(c)).norm();
  if (residual > 1e-8)
    throw ParameterError("predict_final_state: initial state is not in the ground space (residual " +
                         std::to_string(residual) + ")");
  const Eigen::VectorXcd d = u.transpose() * c;
  StateVector out = basis.combine(d);
  const double nrm = out.norm();
  if (!(nrm > 0.0)) throw NumericalError("predict_final_state: prediction vanished");
  return out / nrm;
}

}  // namespace q2sat
