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


#include "q2sat/chain.hpp"

#include <cmath>
#include <cstdio>

#include "q2sat/error.hpp"

namespace q2sat {

std::string to_string(Boundary boundary) {
  return boundary == Boundary::Open ? "open" : "periodic";
}

Boundary parse_boundary(const std::string& text) {
  if (text == "open") return Boundary::Open;
  if (text == "periodic") return Boundary::Periodic;
  throw ParameterError("boundary must be 'open' or 'periodic', got '" + text + "'");
}

void ChainSpec::validate() const {
  if (n < 2) throw ParameterError("chain length must be at least 2");
  if (!(beta >= 0.0 && beta <= 1.0)) throw ParameterError("chain beta must lie in [0, 1]");
  if (!(delta > 0.0)) throw ParameterError("chain delta must be positive");
}

ClauseParams ChainSpec::clause() const {
  ClauseParams c;
  c.beta = cplx(beta, 0.0);
  c.delta = delta;
  return c;
}

std::vector<std::pair<int, int>> ChainSpec::bonds() const {
  std::vector<std::pair<int, int>> b;
  for (int i = 0; i + 1 < n; ++i) b.emplace_back(i, i + 1);
  if (boundary == Boundary::Periodic && n > 2) b.emplace_back(n - 1, 0);
  return b;
}

double small_beta_reference_dispersion(double beta, double k, double delta) {
  return delta * (0.5 - 2.0 * beta * std::cos(k));
}

double balanced_reference_dispersion(double k, double delta) {
  return delta * (1.0 + std::cos(k));
}

double one_magnon_dispersion(double beta, double k, double delta) {
  const double alpha = std::sqrt(std::max(0.0, 1.0 - beta * beta));
  return delta * (1.0 + 2.0 * alpha * beta * std::cos(k));
}

Eigen::MatrixXcd one_magnon_block(const ChainSpec& spec) {
  spec.validate();
  const ClauseParams c = spec.clause();
  const double alpha = c.alpha();
  const cplx beta = c.beta;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(spec.n, spec.n);
  for (const auto& [a, b] : spec.bonds()) {
    // Delta |Phi><Phi| restricted to {|1_a 0_b>, |0_a 1_b>}.
    h(a, a) += spec.delta * alpha * alpha;
    h(b, b) += spec.delta * std::norm(beta);
    h(b, a) += spec.delta * alpha * beta;
    h(a, b) += spec.delta * alpha * std::conj(beta);
  }
  return h;
}

Eigen::VectorXd one_magnon_band(const ChainSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(one_magnon_block(spec),
                                                      Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalError("one_magnon_band: eigensolver failed");
  return eig.eigenvalues();
}

double one_magnon_gap(const ChainSpec& spec) {
  const Eigen::VectorXd band = one_magnon_band(spec);
  const double tol = 1e-9 * spec.delta;
  for (Eigen::Index i = 0; i < band.size(); ++i)
    if (band[i] > tol) return band[i];
  throw NumericalError("one_magnon_gap: the one-magnon block has no excited level");
}

SparseHamiltonian build_chain_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const ClauseParams c = spec.clause();
  std::vector<LocalTerm> terms;
  for (const auto& [a, b] : spec.bonds()) terms.push_back(clause_term(c, a, b));
  return SparseHamiltonian(spec.n, std::move(terms));
}

std::vector<ChainGapRow> chain_gap_table(const std::vector<int>& lengths,
                                         const std::vector<double>& betas, Boundary boundary,
                                         double delta) {
  std::vector<ChainGapRow> rows;
  for (double beta : betas)
    for (int n : lengths) {
      ChainSpec spec{n, beta, delta, boundary};
      rows.push_back({n, beta, boundary, one_magnon_gap(spec)});
    }
  return rows;
}

FitResult fit_gap_exponent(const std::vector<ChainGapRow>& rows) {
  std::vector<double> x, y;
  for (const ChainGapRow& r : rows) {
    x.push_back(std::log(static_cast<double>(r.n)));
    y.push_back(std::log(r.gap));
  }
  return fit_line(x, y);
}

void write_chain_csv(const std::vector<ChainGapRow>& rows, std::ostream& os) {
  os << "n,beta,boundary,gap\n";
  char buf[128];
  for (const ChainGapRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%s,%.17g\n", r.n, r.beta,
                  to_string(r.boundary).c_str(), r.gap);
    os << buf;
  }
}

}  // namespace q2sat
