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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "q2sat/hamiltonian.hpp"

namespace q2sat {

/// Orthonormal basis of a degenerate ground space. Vectors are stored
/// sparsely: products of small-group ground states touch few basis states,
/// and the full 2^n x g matrix would not fit for large ground spaces.
class GroundBasis {
 public:
  GroundBasis() = default;
  explicit GroundBasis(int n_qubits) : n_qubits_(n_qubits) {}

  /// Columns of a 2^n x g matrix; exact zeros are dropped.
  static GroundBasis from_columns(int n_qubits, const Eigen::MatrixXcd& columns);

  /// Appends a vector given by ascending basis indices and amplitudes.
  void push_back(std::vector<std::uint64_t> indices, std::vector<cplx> values);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t nonzeros() const noexcept { return indices_.size(); }

  /// Magnetization sector of vector k, or -1 when it mixes sectors.
  int sector(std::size_t k) const;

  /// k-th basis vector embedded in the full space.
  StateVector vector(std::size_t k) const;
  /// All vectors as 2^n x g columns (small systems only).
  Eigen::MatrixXcd dense() const;
  /// <psi_k | psi> for every k.
  Eigen::VectorXcd coefficients(const StateVector& psi) const;
  /// sum_k c_k psi_k.
  StateVector combine(const Eigen::VectorXcd& coefficients) const;
  /// Basis psi'_j = sum_k psi_k V_kj.
  GroundBasis transformed(const Eigen::MatrixXcd& v) const;

  /// max |<psi_k|psi_l> - delta_kl|.
  double orthonormality_error() const;

 private:
  int n_qubits_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint64_t> indices_;
  std::vector<cplx> values_;
};

enum class SpectrumMethod { Dense, Iterative };

std::string to_string(SpectrumMethod method);

struct SpectrumOptions {
  /// Eigenvalues within this distance of the ground energy count as ground.
  double degeneracy_tol = 1e-9;
  /// Energy unit (Delta) multiplying both tolerances.
  double energy_unit = 1.0;
  /// Ritz pairs are accepted once ||H x - theta x|| falls below this.
  double residual_tol = 1e-10;
  int block_size = 8;
  int max_subspace = 200;
  int max_restarts = 400;
  /// Split the operator into groups of qubits that share no local term and
  /// combine the group spectra (exact for sums of commuting blocks).
  bool factorize_components = true;
  bool keep_basis = true;
  /// Worker threads for independent sector solves.
  int parallelism = 1;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct SpectrumResult {
  double ground_energy = 0.0;
  /// First excited level minus ground energy; empty when every state is
  /// ground (zero operator).
  std::optional<double> gap_delta;
  /// Number of ground states. The stored basis is empty when keep_basis is
  /// false.
  std::uint64_t degeneracy = 0;
  GroundBasis ground_basis;
  SpectrumMethod method = SpectrumMethod::Iterative;
  /// Some eigenvalue sits in [tol, 100 tol] above the ground energy, so the
  /// split between degeneracy and gap is not trustworthy.
  bool ambiguous = false;
  double degeneracy_tol = 0.0;
  double residual_tol = 0.0;
  double max_residual = 0.0;
  int components = 1;
  int sectors_solved = 0;
};

struct DenseSpectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns
};

/// Full diagonalization; throws ParameterError above `max_dimension`.
DenseSpectrum dense_spectrum(const SparseHamiltonian& h,
                             std::size_t max_dimension = std::size_t{1} << 12);

/// Ground energy, gap and ground basis from a full diagonalization.
SpectrumResult spectrum_from_dense(const SparseHamiltonian& h,
                                   const SpectrumOptions& options = {},
                                   std::size_t max_dimension = std::size_t{1} << 12);

/// Ground energy, degeneracy, gap and ground basis by block Krylov solves
/// on each magnetization sector (and each independent qubit group).
SpectrumResult ground_and_gap(const SparseHamiltonian& h,
                              const SpectrumOptions& options = {});

/// 1 / delta^2; throws NumericalError when the gap is missing or zero.
double inverse_square_gap(const SpectrumResult& res);

/// Lowest eigenpairs of one Hermitian block.
struct SectorSolve {
  double lowest = 0.0;
  Eigen::MatrixXcd ground_vectors;
  std::optional<double> first_excited;  // absolute eigenvalue
  double max_residual = 0.0;
  bool ambiguous = false;
};

/// Block Lanczos with full reorthogonalization and locking. All eigenpairs
/// within `degeneracy_tol` of the lowest eigenvalue are locked, plus the
/// first eigenvalue above. Deterministic for a given seed.
SectorSolve solve_sector(const SparseHamiltonian::Matrix& block,
                         const SpectrumOptions& options, std::uint64_t seed);

}  // namespace q2sat
