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

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "q2sat/hamiltonian.hpp"
#include "q2sat/stats.hpp"

namespace q2sat {

enum class Boundary { Open, Periodic };

std::string to_string(Boundary boundary);
Boundary parse_boundary(const std::string& text);

/// Nearest-neighbour chain with one clause per bond (i, i+1); the clause on
/// bond (i, i+1) has qubit i in the alpha slot. Periodic chains add the bond
/// (n-1, 0); for n = 2 the two bonds coincide and only one is kept.
struct ChainSpec {
  int n = 8;
  double beta = 0.70710678118654752440;
  double delta = 1.0;
  Boundary boundary = Boundary::Periodic;

  void validate() const;
  ClauseParams clause() const;
  /// Ordered bonds as (alpha-slot qubit, beta-slot qubit) pairs.
  std::vector<std::pair<int, int>> bonds() const;
};

/// Quoted small-beta band: delta (1/2 - 2 beta cos k).
double small_beta_reference_dispersion(double beta, double k, double delta = 1.0);
/// Quoted band at beta = sqrt(2)/2: delta (1 + cos k).
double balanced_reference_dispersion(double k, double delta = 1.0);
/// Band of the periodic one-magnon block: delta (1 + 2 alpha beta cos k).
double one_magnon_dispersion(double beta, double k, double delta = 1.0);

/// n x n block on the states with exactly one 1-bit (basis index i <-> qubit i).
Eigen::MatrixXcd one_magnon_block(const ChainSpec& spec);

/// Ascending eigenvalues of the one-magnon block.
Eigen::VectorXd one_magnon_band(const ChainSpec& spec);

/// Lowest one-magnon eigenvalue above the ground manifold (> 1e-9 delta).
double one_magnon_gap(const ChainSpec& spec);

SparseHamiltonian build_chain_hamiltonian(const ChainSpec& spec);

struct ChainGapRow {
  int n = 0;
  double beta = 0.0;
  Boundary boundary = Boundary::Periodic;
  double gap = 0.0;
};

std::vector<ChainGapRow> chain_gap_table(const std::vector<int>& lengths,
                                         const std::vector<double>& betas, Boundary boundary,
                                         double delta = 1.0);

/// Least-squares slope of log(gap) against log(n) over the rows.
FitResult fit_gap_exponent(const std::vector<ChainGapRow>& rows);

/// CSV with header n,beta,boundary,gap.
void write_chain_csv(const std::vector<ChainGapRow>& rows, std::ostream& os);

}  // namespace q2sat
