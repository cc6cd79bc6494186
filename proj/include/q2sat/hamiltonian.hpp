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

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "q2sat/instance.hpp"

// Basis convention used throughout: qubit a is bit a of a basis index, and
// bit value 0 is the s^z = +1/2 (spin-up) state.

namespace q2sat {

using StateVector = Eigen::VectorXcd;

/// A two-qubit operator. `matrix` is indexed by bit_a + 2 * bit_b.
struct LocalTerm {
  int a = 0;
  int b = 0;
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
};

/// Row-compressed Hermitian operator on n qubits. When assembled from local
/// terms the terms are retained so the operator can be rotated and split
/// into independent qubit groups.
class SparseHamiltonian {
 public:
  using Matrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

  SparseHamiltonian(int n_qubits, std::vector<LocalTerm> terms);
  static SparseHamiltonian from_matrix(int n_qubits, Matrix matrix);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << n_qubits_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::vector<LocalTerm>& terms() const noexcept { return terms_; }
  bool has_terms() const noexcept { return has_terms_; }

  cplx entry(std::size_t row, std::size_t col) const;

  /// Magnetization sector of a basis state: its number of 1-bits.
  static int sector_of(std::uint64_t state) { return std::popcount(state); }

  /// True when every stored entry couples states of equal sector.
  bool conserves_magnetization() const;

  /// Upper bound on the spectral norm: sum of local-term norms, or the
  /// maximum absolute row sum when no terms are available.
  double norm_bound() const;

 private:
  SparseHamiltonian() = default;

  int n_qubits_ = 0;
  Matrix matrix_;
  std::vector<LocalTerm> terms_;
  bool has_terms_ = false;
};

/// Single-qubit spin-1/2 operators in the (|0>, |1>) basis.
Eigen::Matrix2cd spin_x();
Eigen::Matrix2cd spin_y();
Eigen::Matrix2cd spin_z();

/// A (x) B with A on qubit a and B on qubit b, in LocalTerm indexing.
Eigen::Matrix4cd local_product(const Eigen::Matrix2cd& on_a,
                               const Eigen::Matrix2cd& on_b);

/// Delta * |Phi><Phi| for a clause on (a, b). a > b is allowed and keeps the
/// clause orientation (alpha on |1_a 0_b>).
LocalTerm clause_term(const ClauseParams& clause, int a, int b);

SparseHamiltonian build_projector(const ClauseParams& clause, int a, int b, int n);

/// Delta * sum_j Pi_j in projector form: solutions have energy exactly 0.
SparseHamiltonian build_h0(const Q2SATInstance& inst);

/// Coefficients of the spin-operator expansion of one clause:
///   zz*(sz sz) + z_diff*(sz_a - sz_b) + xx_yy*(sx sx + sy sy)
///   + xy_yx*(sx_a sy_b - sy_a sx_b), and Delta * Pi = that + constant.
struct SpinFormCoefficients {
  double zz = 0.0;
  double z_diff = 0.0;
  double xx_yy = 0.0;
  double xy_yx = 0.0;
  double constant = 0.0;
};

SpinFormCoefficients spin_form_coefficients(const ClauseParams& clause);

/// Sum of the spin-form clause terms, without the dropped constants.
SparseHamiltonian build_spin_form(const Q2SATInstance& inst);

/// Rotation of every qubit about `axis` by angle 2*pi*t/T (times `direction`).
struct RotationSchedule {
  Eigen::Vector3d axis{0.0, 1.0, 0.0};
  double total_time = 1.0;
  int direction = 1;

  void validate() const;
  double angle(double t) const;
  /// 2*pi/T with the traversal sign.
  double angular_velocity() const;
};

/// exp(i * angle * n.s) = cos(angle/2) I + i sin(angle/2) n.sigma.
Eigen::Matrix2cd single_qubit_rotation(const Eigen::Vector3d& axis, double angle);

/// H(t) = W(t) H0 W(t)^dagger with W(t) the product of single_qubit_rotation
/// at angle(t). Returns H0 itself at t = 0 and t = T. Requires local terms.
SparseHamiltonian rotate_hamiltonian(const SparseHamiltonian& h0,
                                     const RotationSchedule& sched, double t);

StateVector apply(const SparseHamiltonian& h, const StateVector& psi);
void apply_into(const SparseHamiltonian& h, const StateVector& psi, StateVector& out);

/// In-place application of a 2x2 gate to one qubit.
void apply_single_qubit(const Eigen::Matrix2cd& gate, int qubit, StateVector& psi);
void apply_all_qubits(const Eigen::Matrix2cd& gate, int n_qubits, StateVector& psi);

/// out = (sum_a n.s_a) psi.
void apply_total_spin(const Eigen::Vector3d& axis, int n_qubits,
                      const StateVector& psi, StateVector& out);

/// out = W H0 W^dagger psi without assembling the rotated matrix. `scratch`
/// is resized as needed.
void apply_rotated(const SparseHamiltonian& h0, const Eigen::Matrix2cd& w,
                   const StateVector& psi, StateVector& out, StateVector& scratch);

StateVector basis_state(int n_qubits, std::uint64_t index);

/// Coordinate text dump: "row col re im" per stored entry, row-major order.
void dump_coordinate(const SparseHamiltonian& h, std::ostream& os);

}  // namespace q2sat
