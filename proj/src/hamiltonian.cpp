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


#include "q2sat/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "q2sat/error.hpp"

namespace q2sat {

namespace {

using Triplet = Eigen::Triplet<cplx>;

void append_term(const LocalTerm& term, int n_qubits, std::vector<Triplet>& out) {
  const std::uint64_t bit_a = std::uint64_t{1} << term.a;
  const std::uint64_t bit_b = std::uint64_t{1} << term.b;
  auto embed = [&](int local) {
    return ((local & 1) ? bit_a : 0) | ((local & 2) ? bit_b : 0);
  };
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (bit_a | bit_b)) continue;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const cplx v = term.matrix(r, c);
        if (v == cplx{}) continue;
        out.emplace_back(static_cast<int>(base | embed(r)),
                         static_cast<int>(base | embed(c)), v);
      }
  }
}

double spectral_norm(const Eigen::Matrix4cd& m) {
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

SparseHamiltonian::SparseHamiltonian(int n_qubits, std::vector<LocalTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)), has_terms_(true) {
  if (n_qubits_ < 1 || n_qubits_ > 30)
    throw ParameterError("SparseHamiltonian: qubit count must lie in [1, 30]");
  std::vector<Triplet> triplets;
  for (const LocalTerm& t : terms_) {
    if (t.a == t.b || t.a < 0 || t.b < 0 || t.a >= n_qubits_ || t.b >= n_qubits_)
      throw ParameterError("SparseHamiltonian: invalid term support");
    append_term(t, n_qubits_, triplets);
  }
  const auto dim = static_cast<Eigen::Index>(dimension());
  matrix_.resize(dim, dim);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
}

SparseHamiltonian SparseHamiltonian::from_matrix(int n_qubits, Matrix matrix) {
  SparseHamiltonian h;
  h.n_qubits_ = n_qubits;
  if (matrix.rows() != static_cast<Eigen::Index>(h.dimension()) ||
      matrix.cols() != matrix.rows())
    throw ParameterError("SparseHamiltonian: matrix dimension must be 2^n");
  h.matrix_ = std::move(matrix);
  h.matrix_.makeCompressed();
  return h;
}

cplx SparseHamiltonian::entry(std::size_t row, std::size_t col) const {
  return matrix_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

bool SparseHamiltonian::conserves_magnetization() const {
  for (Eigen::Index r = 0; r < matrix_.outerSize(); ++r)
    for (Matrix::InnerIterator it(matrix_, r); it; ++it)
      if (sector_of(static_cast<std::uint64_t>(r)) !=
          sector_of(static_cast<std::uint64_t>(it.col())) && it.value() != cplx{})
        return false;
  return true;
}

double SparseHamiltonian::norm_bound() const {
  if (has_terms_) {
    double total = 0.0;
    for (const LocalTerm& t : terms_) total += spectral_norm(t.matrix);
    return total;
  }
  double best = 0.0;
  for (Eigen::Index r = 0; r < matrix_.outerSize(); ++r) {
    double row = 0.0;
    for (Matrix::InnerIterator it(matrix_, r); it; ++it) row += std::abs(it.value());
    best = std::max(best, row);
  }
  return best;
}

Eigen::Matrix2cd spin_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}

Eigen::Matrix2cd spin_y() {
  Eigen::Matrix2cd m;
  m << cplx{}, cplx(0.0, -0.5), cplx(0.0, 0.5), cplx{};
  return m;
}

Eigen::Matrix2cd spin_z() {
  Eigen::Matrix2cd m;
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

Eigen::Matrix4cd local_product(const Eigen::Matrix2cd& on_a,
                               const Eigen::Matrix2cd& on_b) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = on_a(r & 1, c & 1) * on_b(r >> 1, c >> 1);
  return out;
}

LocalTerm clause_term(const ClauseParams& clause, int a, int b) {
  clause.validate();
  if (a == b) throw ParameterError("clause acts on two distinct qubits");
  const double alpha = clause.alpha();
  const cplx beta = clause.beta;
  const double delta = clause.delta;
  // |1_a 0_b> has local index 1, |0_a 1_b> index 2.
  LocalTerm t{a, b, Eigen::Matrix4cd::Zero()};
  t.matrix(1, 1) = delta * alpha * alpha;
  t.matrix(2, 2) = delta * std::norm(beta);
  t.matrix(1, 2) = delta * alpha * std::conj(beta);
  t.matrix(2, 1) = delta * alpha * beta;
  return t;
}

SparseHamiltonian build_projector(const ClauseParams& clause, int a, int b, int n) {
  if (a == b) throw ParameterError("build_projector: a must differ from b");
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw ParameterError("build_projector: qubit index out of range");
  return SparseHamiltonian(n, {clause_term(clause, a, b)});
}

SparseHamiltonian build_h0(const Q2SATInstance& inst) {
  std::vector<LocalTerm> terms;
  terms.reserve(inst.edges().size());
  for (const Edge& e : inst.edges()) terms.push_back(clause_term(inst.clause(), e.a, e.b));
  return SparseHamiltonian(inst.n(), std::move(terms));
}

SpinFormCoefficients spin_form_coefficients(const ClauseParams& clause) {
  clause.validate();
  const double d = clause.delta;
  const double b2 = std::norm(clause.beta);
  const double alpha = std::sqrt(std::max(0.0, 1.0 - b2));
  return {-d, -0.5 * d * (1.0 - 2.0 * b2), 2.0 * d * clause.beta.real() * alpha,
          2.0 * d * clause.beta.imag() * alpha, 0.25 * d};
}

SparseHamiltonian build_spin_form(const Q2SATInstance& inst) {
  const SpinFormCoefficients c = spin_form_coefficients(inst.clause());
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix4cd unit =
      c.zz * local_product(spin_z(), spin_z()) +
      c.z_diff * (local_product(spin_z(), id) - local_product(id, spin_z())) +
      c.xx_yy * (local_product(spin_x(), spin_x()) + local_product(spin_y(), spin_y())) +
      c.xy_yx * (local_product(spin_x(), spin_y()) - local_product(spin_y(), spin_x()));
  std::vector<LocalTerm> terms;
  for (const Edge& e : inst.edges()) terms.push_back({e.a, e.b, unit});
  return SparseHamiltonian(inst.n(), std::move(terms));
}

void RotationSchedule::validate() const {
  if (std::abs(axis.norm() - 1.0) > 1e-12)
    throw ParameterError("rotation axis must be a unit vector");
  if (!(total_time > 0.0) || !std::isfinite(total_time))
    throw ParameterError("rotation total time must be positive");
  if (direction != 1 && direction != -1)
    throw ParameterError("rotation direction must be +1 or -1");
}

double RotationSchedule::angle(double t) const {
  return direction * 2.0 * std::numbers::pi * t / total_time;
}

double RotationSchedule::angular_velocity() const {
  return direction * 2.0 * std::numbers::pi / total_time;
}

Eigen::Matrix2cd single_qubit_rotation(const Eigen::Vector3d& axis, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd sigma_n = 2.0 * (axis.x() * spin_x() + axis.y() * spin_y() +
                                    axis.z() * spin_z());
  return c * Eigen::Matrix2cd::Identity() + i * s * sigma_n;
}

SparseHamiltonian rotate_hamiltonian(const SparseHamiltonian& h0,
                                     const RotationSchedule& sched, double t) {
  sched.validate();
  if (!(t >= 0.0 && t <= sched.total_time))
    throw ParameterError("rotate_hamiltonian: t must lie in [0, T]");
  if (!h0.has_terms())
    throw ParameterError("rotate_hamiltonian: operator has no local-term form");
  if (t == 0.0 || t == sched.total_time) return h0;
  const Eigen::Matrix2cd w = single_qubit_rotation(sched.axis, sched.angle(t));
  const Eigen::Matrix4cd ww = local_product(w, w);
  std::vector<LocalTerm> rotated = h0.terms();
  for (LocalTerm& term : rotated) term.matrix = ww * term.matrix * ww.adjoint();
  return SparseHamiltonian(h0.n_qubits(), std::move(rotated));
}

void apply_into(const SparseHamiltonian& h, const StateVector& psi, StateVector& out) {
  const auto& m = h.matrix();
  if (psi.size() != m.cols())
    throw ParameterError("apply: state dimension does not match operator");
  out.resize(m.rows());
  const int* outer = m.outerIndexPtr();
  const int* inner = m.innerIndexPtr();
  const cplx* values = m.valuePtr();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    cplx acc{};
    for (int k = outer[r]; k < outer[r + 1]; ++k) acc += values[k] * psi[inner[k]];
    out[r] = acc;
  }
}

StateVector apply(const SparseHamiltonian& h, const StateVector& psi) {
  StateVector out;
  apply_into(h, psi, out);
  return out;
}

void apply_single_qubit(const Eigen::Matrix2cd& gate, int qubit, StateVector& psi) {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const auto dim = static_cast<std::uint64_t>(psi.size());
  const cplx g00 = gate(0, 0), g01 = gate(0, 1), g10 = gate(1, 0), g11 = gate(1, 1);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const cplx x = psi[i];
    const cplx y = psi[i | bit];
    psi[i] = g00 * x + g01 * y;
    psi[i | bit] = g10 * x + g11 * y;
  }
}

void apply_all_qubits(const Eigen::Matrix2cd& gate, int n_qubits, StateVector& psi) {
  for (int q = 0; q < n_qubits; ++q) apply_single_qubit(gate, q, psi);
}

void apply_total_spin(const Eigen::Vector3d& axis, int n_qubits,
                      const StateVector& psi, StateVector& out) {
  const cplx z_half = 0.5 * axis.z();
  const cplx lower(0.5 * axis.x(), 0.5 * axis.y());   // <1| n.s |0>
  const cplx upper(0.5 * axis.x(), -0.5 * axis.y());  // <0| n.s |1>
  const auto dim = static_cast<std::uint64_t>(psi.size());
  out.setZero(psi.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    cplx acc{};
    for (int q = 0; q < n_qubits; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (i & bit)
        acc += lower * psi[i ^ bit] - z_half * psi[i];
      else
        acc += z_half * psi[i] + upper * psi[i ^ bit];
    }
    out[i] = acc;
  }
}

void apply_rotated(const SparseHamiltonian& h0, const Eigen::Matrix2cd& w,
                   const StateVector& psi, StateVector& out, StateVector& scratch) {
  scratch = psi;
  apply_all_qubits(w.adjoint(), h0.n_qubits(), scratch);
  apply_into(h0, scratch, out);
  apply_all_qubits(w, h0.n_qubits(), out);
}

StateVector basis_state(int n_qubits, std::uint64_t index) {
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits));
  psi[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

void dump_coordinate(const SparseHamiltonian& h, std::ostream& os) {
  const auto& m = h.matrix();
  char buf[128];
  for (Eigen::Index r = 0; r < m.outerSize(); ++r)
    for (SparseHamiltonian::Matrix::InnerIterator it(m, r); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%lld %lld %.17g %.17g\n",
                    static_cast<long long>(r), static_cast<long long>(it.col()),
                    it.value().real(), it.value().imag());
      os << buf;
    }
}

}  // namespace q2sat
