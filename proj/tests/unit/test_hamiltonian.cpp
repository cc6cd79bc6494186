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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "q2sat/error.hpp"
#include "q2sat/hamiltonian.hpp"

using namespace q2sat;
using oracle::Mat;

namespace {

// |Phi><Phi| on (a, b) built entry by entry.
Mat projector_oracle(cplx beta, double delta, int a, int b, int n) {
  const double alpha = std::sqrt(1.0 - std::norm(beta));
  const Eigen::Index dim = Eigen::Index{1} << n;
  auto amp = [&](Eigen::Index i) -> cplx {
    const int ba = (i >> a) & 1, bb = (i >> b) & 1;
    if (ba == 1 && bb == 0) return alpha;
    if (ba == 0 && bb == 1) return beta;
    return 0.0;
  };
  const Eigen::Index mask = (Eigen::Index{1} << a) | (Eigen::Index{1} << b);
  Mat p = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if ((i & ~mask) == (j & ~mask)) p(i, j) = delta * amp(i) * std::conj(amp(j));
  return p;
}

struct SpinOps {
  Mat x, y, z;
};

// The spin-operator expansion of one clause with arbitrary single-site
// operators substituted for s^x, s^y, s^z.
Mat spin_form_oracle(cplx beta, double delta, const SpinOps& a, const SpinOps& b) {
  const double alpha = std::sqrt(1.0 - std::norm(beta));
  const double zz = -delta;
  const double zd = -0.5 * delta * (1.0 - 2.0 * std::norm(beta));
  const double xx = 2.0 * delta * beta.real() * alpha;
  const double xy = 2.0 * delta * beta.imag() * alpha;
  return zz * a.z * b.z + zd * (a.z - b.z) + xx * (a.x * b.x + a.y * b.y) +
         xy * (a.x * b.y - a.y * b.x);
}

SpinOps site(int q, int n) {
  return {oracle::embed(oracle::sx(), q, n), oracle::embed(oracle::sy(), q, n),
          oracle::embed(oracle::sz(), q, n)};
}

// Rotation about y by theta, substituted component by component.
SpinOps rotated_site(int q, int n, double theta) {
  const SpinOps s = site(q, n);
  return {s.x * std::cos(theta) + s.z * std::sin(theta), s.y,
          -s.x * std::sin(theta) + s.z * std::cos(theta)};
}

Q2SATInstance random_instance(int n, double d, std::uint64_t seed, std::mt19937_64& rng) {
  ClauseParams c;
  c.beta = oracle::random_beta(rng);
  return generate_instance(n, d, c, seed);
}

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("balanced projector on two qubits") {
  const SparseHamiltonian p = build_projector(ClauseParams{}, 0, 1, 2);
  const Mat m = oracle::dense(p);
  Mat expect = Mat::Zero(4, 4);
  expect.block(1, 1, 2, 2).setConstant(0.5);
  CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("beta = 1 projects onto |0_a 1_b>") {
  ClauseParams c;
  c.beta = 1.0;
  const Mat m = oracle::dense(build_projector(c, 0, 1, 2));
  Mat expect = Mat::Zero(4, 4);
  expect(2, 2) = 1.0;  // bit a = 0, bit b = 1
  CHECK((m - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("projector spectrum, idempotence and oracle agreement") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    const int n = 2 + trial % 3;
    const int a = trial % n, b = (trial + 1 + trial / 3) % n;
    if (a == b) continue;
    const Mat m = oracle::dense(build_projector(c, a, b, n));
    CHECK((m - projector_oracle(c.beta, 1.0, a, b, n)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((m * m - m).cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::VectorXd ev = oracle::eigenvalues(m);
    const Eigen::Index dim = ev.size();
    for (Eigen::Index i = 0; i < dim; ++i)
      CHECK(std::abs(ev[i] - (i >= dim - dim / 4 ? 1.0 : 0.0)) < 1e-12);
  }
  CHECK_THROWS_AS(build_projector(ClauseParams{}, 1, 1, 3), ParameterError);
  CHECK_THROWS_AS(build_projector(ClauseParams{}, 0, 3, 3), ParameterError);
}

TEST_CASE("two-qubit spectrum is {0, 0, 0, 1}") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    const Eigen::VectorXd ev = oracle::eigenvalues(oracle::dense(build_projector(c, 0, 1, 2)));
    CHECK(std::abs(ev[0]) < 1e-14);
    CHECK(std::abs(ev[2]) < 1e-14);
    CHECK(std::abs(ev[3] - 1.0) < 1e-14);
  }
}

TEST_CASE("H0 annihilates both aligned states exactly") {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 30; ++s) {
    const int n = 2 + s % 9;
    const SparseHamiltonian h = build_h0(random_instance(n, 0.5, s, rng));
    CHECK(q2sat::apply(h, basis_state(n, 0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(q2sat::apply(h, basis_state(n, (std::uint64_t{1} << n) - 1)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("three-qubit path has a four-fold ground level") {
  const Q2SATInstance inst(3, {{0, 1}, {1, 2}}, ClauseParams{});
  const Eigen::VectorXd ev = oracle::eigenvalues(oracle::dense(build_h0(inst)));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i]) < 1e-12);
  CHECK(ev[4] > 1e-3);
}

TEST_CASE("spin-form coefficient examples") {
  SpinFormCoefficients c = spin_form_coefficients(ClauseParams{});
  CHECK(c.zz == doctest::Approx(-1.0));
  CHECK(std::abs(c.z_diff) < 1e-15);
  CHECK(c.xx_yy == doctest::Approx(1.0));
  CHECK(c.xy_yx == 0.0);
  CHECK(c.constant == 0.25);

  ClauseParams zero;
  zero.beta = 0.0;
  c = spin_form_coefficients(zero);
  CHECK(c.zz == -1.0);
  CHECK(c.z_diff == -0.5);
  CHECK(c.xx_yy == 0.0);
  CHECK(c.xy_yx == 0.0);

  ClauseParams imag;
  imag.beta = cplx(0.0, std::sqrt(0.5));
  c = spin_form_coefficients(imag);
  CHECK(c.zz == -1.0);
  CHECK(std::abs(c.z_diff) < 1e-15);
  CHECK(c.xx_yy == 0.0);
  CHECK(c.xy_yx == doctest::Approx(1.0));
}

TEST_CASE("spin form plus m delta / 4 equals the projector form") {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 20; ++s) {
    const int n = 2 + s % 5;
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    c.delta = 0.5 + 0.25 * (s % 4);
    const Q2SATInstance inst = generate_instance(n, 0.6, c, s);
    const Mat h0 = oracle::dense(build_h0(inst));
    const Mat spin = oracle::dense(build_spin_form(inst));
    const Mat shift = Mat::Identity(h0.rows(), h0.cols()) * (inst.m() * c.delta / 4.0);
    CHECK((spin + shift - h0).cwiseAbs().maxCoeff() < 1e-14);

    // Independent check of the expansion itself.
    Mat expanded = shift;
    for (const Edge& e : inst.edges())
      expanded += spin_form_oracle(c.beta, c.delta, site(e.a, n), site(e.b, n));
    CHECK((expanded - h0).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("H0 conserves total Sz exactly") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    const int n = 3 + s % 6;
    const SparseHamiltonian h = build_h0(random_instance(n, 0.5, s, rng));
    CHECK(h.conserves_magnetization());
    const auto& m = h.matrix();
    for (Eigen::Index r = 0; r < m.outerSize(); ++r)
      for (SparseHamiltonian::Matrix::InnerIterator it(m, r); it; ++it)
        CHECK(SparseHamiltonian::sector_of(static_cast<std::uint64_t>(r)) ==
              SparseHamiltonian::sector_of(static_cast<std::uint64_t>(it.col())));
  }
}

TEST_CASE("stored matrix is exactly Hermitian") {
  std::mt19937_64 rng(6);
  const SparseHamiltonian h = build_h0(random_instance(7, 0.5, 1, rng));
  const auto dim = h.dimension();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) REQUIRE(h.entry(r, c) == std::conj(h.entry(c, r)));
}

TEST_CASE("rotation endpoints and closed path") {
  std::mt19937_64 rng(7);
  const SparseHamiltonian h0 = build_h0(random_instance(5, 0.6, 2, rng));
  RotationSchedule s;
  s.total_time = 3.0;
  const Mat d0 = oracle::dense(h0);
  CHECK((oracle::dense(rotate_hamiltonian(h0, s, 0.0)) - d0).cwiseAbs().maxCoeff() == 0.0);
  CHECK((oracle::dense(rotate_hamiltonian(h0, s, 3.0)) - d0).cwiseAbs().maxCoeff() == 0.0);
  // Conjugating by the explicit full-turn rotation also returns H0.
  const Eigen::Matrix2cd w = single_qubit_rotation(s.axis, s.angle(s.total_time));
  Mat wfull = Mat::Identity(1, 1);
  for (int q = 0; q < 5; ++q) wfull = oracle::kron(Mat(w), wfull);
  CHECK((wfull * d0 * wfull.adjoint() - d0).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(rotate_hamiltonian(h0, s, 3.5), ParameterError);
  CHECK_THROWS_AS(rotate_hamiltonian(h0, s, -0.1), ParameterError);
  s.axis = Eigen::Vector3d(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(rotate_hamiltonian(h0, s, 1.0), ParameterError);
}

TEST_CASE("half turn about y flips s^z and s^x") {
  RotationSchedule s;
  s.total_time = 2.0;
  const Eigen::Matrix2cd w = single_qubit_rotation(s.axis, s.angle(1.0));
  const Mat z = w * Eigen::Matrix2cd(oracle::sz()) * w.adjoint();
  const Mat x = w * Eigen::Matrix2cd(oracle::sx()) * w.adjoint();
  CHECK((z + oracle::sz()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((x + oracle::sx()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("rotated H(t) matches the y-axis substitution formulas") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + trial % 3;
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    const Q2SATInstance inst = generate_instance(n, 0.7, c, trial);
    RotationSchedule s;
    s.total_time = 2.5;
    for (double t : {0.3, 1.1, 1.25, 2.2}) {
      const double theta = 2.0 * std::numbers::pi * t / s.total_time;
      Mat expect = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n) * (inst.m() / 4.0);
      for (const Edge& e : inst.edges())
        expect += spin_form_oracle(c.beta, 1.0, rotated_site(e.a, n, theta), rotated_site(e.b, n, theta));
      const Mat got = oracle::dense(rotate_hamiltonian(build_h0(inst), s, t));
      CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("eigenvalues of H(t) do not depend on t") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + trial % 6;
    const SparseHamiltonian h0 = build_h0(random_instance(n, 0.4, trial, rng));
    RotationSchedule s;
    s.total_time = 1.0;
    s.axis = Eigen::Vector3d(std::sin(0.3 * trial), 0.0, std::cos(0.3 * trial)).normalized();
    const Eigen::VectorXd ref = oracle::eigenvalues(oracle::dense(h0));
    for (double t : {0.13, 0.5, 0.77}) {
      const Eigen::VectorXd ev = oracle::eigenvalues(oracle::dense(rotate_hamiltonian(h0, s, t)));
      CHECK((ev - ref).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("apply agrees with dense products") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 7;
    const SparseHamiltonian h = build_h0(random_instance(n, 0.5, trial, rng));
    const StateVector psi = oracle::random_state(static_cast<Eigen::Index>(h.dimension()), rng);
    const StateVector got = q2sat::apply(h, psi);
    CHECK((got - oracle::dense(h) * psi).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(psi.dot(got).imag()) < 1e-12);
    CHECK_THROWS_AS(q2sat::apply(h, StateVector::Zero(3)), ParameterError);
  }
}

TEST_CASE("projector action on |0_a 1_b>") {
  const SparseHamiltonian p = build_projector(ClauseParams{}, 0, 1, 2);
  const StateVector out = q2sat::apply(p, basis_state(2, 2));
  CHECK(std::abs(out[1] - 0.5) < 1e-15);
  CHECK(std::abs(out[2] - 0.5) < 1e-15);
  CHECK(std::abs(out[0]) == 0.0);
  CHECK(std::abs(out[3]) == 0.0);
}

TEST_CASE("matrix-free rotated action and total spin") {
  std::mt19937_64 rng(11);
  const int n = 5;
  const SparseHamiltonian h0 = build_h0(random_instance(n, 0.6, 4, rng));
  RotationSchedule s;
  s.total_time = 1.0;
  s.axis = Eigen::Vector3d(0.6, 0.0, 0.8);
  const StateVector psi = oracle::random_state(32, rng);
  StateVector out, scratch;
  apply_rotated(h0, single_qubit_rotation(s.axis, s.angle(0.4)), psi, out, scratch);
  CHECK((out - oracle::dense(rotate_hamiltonian(h0, s, 0.4)) * psi).cwiseAbs().maxCoeff() < 1e-12);

  const Mat sn = 0.6 * oracle::total(oracle::sx(), n) + 0.8 * oracle::total(oracle::sz(), n);
  apply_total_spin(s.axis, n, psi, out);
  CHECK((out - sn * psi).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("coordinate dump is sorted row-major") {
  const SparseHamiltonian p = build_projector(ClauseParams{}, 0, 1, 2);
  std::ostringstream os;
  dump_coordinate(p, os);
  std::istringstream is(os.str());
  int r, c, count = 0;
  double re, im;
  long last = -1;
  while (is >> r >> c >> re >> im) {
    CHECK(r * 4L + c > last);
    last = r * 4L + c;
    CHECK(std::abs(re - 0.5) < 1e-15);
    ++count;
  }
  CHECK(count == 4);
}

}  // TEST_SUITE
