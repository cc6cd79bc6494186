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

#include "oracles.hpp"
#include "q2sat/dynamics.hpp"
#include "q2sat/error.hpp"
#include "q2sat/holonomy.hpp"

using namespace q2sat;
using oracle::Mat;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Mat axis_spin(const Eigen::Vector3d& axis, int n) {
  return axis.x() * oracle::total(oracle::sx(), n) + axis.y() * oracle::total(oracle::sy(), n) +
         axis.z() * oracle::total(oracle::sz(), n);
}

SpectrumResult ground_of(const Q2SATInstance& inst) { return ground_and_gap(build_h0(inst)); }

}  // namespace

TEST_SUITE("holonomy") {

TEST_CASE("one-dimensional space picks up a pure phase") {
  const GroundBasis b = GroundBasis::from_columns(1, Mat::Identity(2, 1));
  RotationSchedule s;
  s.axis = Eigen::Vector3d(0.0, 0.0, 1.0);
  s.total_time = 10.0;
  const Mat a = gauge_matrix(b, s);
  REQUIRE(a.rows() == 1);
  CHECK(std::abs(a(0, 0) - (-2.0 * std::numbers::pi / 10.0 * 0.5)) < 1e-15);
  const Mat u = holonomy(a, s.total_time);
  CHECK(std::abs(u(0, 0) + 1.0) < 1e-14);
}

TEST_CASE("free spins return with the sign of a full turn") {
  for (int n = 2; n <= 4; ++n) {
    const SpectrumResult r = ground_of(Q2SATInstance(n, {}, ClauseParams{}));
    RotationSchedule s;
    s.total_time = 4.0;
    s.axis = Eigen::Vector3d(0.2, 0.7, -0.4).normalized();
    const GaugeHolonomy h = compute_holonomy(r.ground_basis, s);
    const double sign = n % 2 ? -1.0 : 1.0;
    CHECK(max_abs(h.holonomy - sign * Mat::Identity(h.holonomy.rows(), h.holonomy.cols())) < 1e-12);
  }
}

TEST_CASE("gauge matrix equals the projected spin operator") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 5;
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    const SpectrumResult r = ground_of(generate_instance(n, 0.5, c, trial));
    RotationSchedule s;
    s.total_time = 3.0 + trial;
    s.direction = trial % 2 ? -1 : 1;
    s.axis = Eigen::Vector3d(std::cos(trial), 0.5, std::sin(trial)).normalized();
    const Mat psi = r.ground_basis.dense();
    const Mat m = psi.adjoint() * axis_spin(s.axis, n) * psi;
    const double w = s.direction * 2.0 * std::numbers::pi / s.total_time;
    const Mat a = gauge_matrix(r.ground_basis, s);
    CHECK(max_abs(a - (-w) * m.transpose()) < 1e-12);
    CHECK(max_abs(a - a.adjoint()) < 1e-12);
    CHECK(max_abs(gauge_matrix(r.ground_basis, s, GaugeConvention::Reversed) + a) < 1e-15);
    const GaugeHolonomy h = compute_holonomy(r.ground_basis, s);
    CHECK(h.unitarity_error < 1e-12);
    CHECK(unitarity_error(h.holonomy) == h.unitarity_error);
  }
}

TEST_CASE("balanced single clause: y-axis gauge vanishes on the 3-dim ground space") {
  const SpectrumResult r = ground_of(Q2SATInstance(2, {{0, 1}}, ClauseParams{}));
  REQUIRE(r.ground_basis.size() == 3);
  RotationSchedule s;
  s.total_time = 7.0;
  const Mat a = gauge_matrix(r.ground_basis, s);
  CHECK(max_abs(a) < 1e-14);
  CHECK(max_abs(holonomy(a, 7.0) - Mat::Identity(3, 3)) < 1e-14);
  CHECK(max_abs(raising_lowering_gauge(r.ground_basis, 7.0)) < 1e-14);
}

TEST_CASE("raising-lowering form equals the y-axis gauge") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + trial % 4;
    ClauseParams c;
    c.beta = oracle::random_beta(rng);
    const SpectrumResult r = ground_of(generate_instance(n, 0.6, c, trial));
    RotationSchedule s;
    s.total_time = 5.0;
    CHECK(max_abs(raising_lowering_gauge(r.ground_basis, 5.0) - gauge_matrix(r.ground_basis, s)) <
          1e-12);
  }
  CHECK_THROWS_AS(raising_lowering_gauge(GroundBasis::from_columns(1, Mat::Identity(2, 2)), 0.0),
                  ParameterError);
}

TEST_CASE("zero gauge gives the identity") {
  const Mat u = holonomy(Mat::Zero(4, 4), 12.0);
  CHECK(max_abs(u - Mat::Identity(4, 4)) == 0.0);
  const Mat v = holonomy([](double) { return Mat(Mat::Zero(3, 3)); }, 1.0, 10);
  CHECK(max_abs(v - Mat::Identity(3, 3)) == 0.0);
}

TEST_CASE("stepwise product reproduces the exponential for constant gauge") {
  std::mt19937_64 rng(53);
  Mat a = Mat::Random(5, 5);
  a = 0.5 * (a + a.adjoint()).eval();
  const Mat once = holonomy(a, 2.0);
  const Mat many = holonomy([&](double) { return a; }, 2.0, 64);
  CHECK(max_abs(once - many) < 1e-12);
  CHECK(max_abs(once - oracle::propagator(a, -2.0)) < 1e-12);
  CHECK_THROWS_AS(holonomy([&](double) { return a; }, 2.0, 0), ParameterError);
  CHECK_THROWS_AS(holonomy([&](double) { return a; }, 0.0, 4), ParameterError);
}

TEST_CASE("midpoint ordering converges at second order") {
  Mat a0 = Mat::Zero(2, 2), a1 = Mat::Zero(2, 2);
  a0 << 1.0, 0.0, 0.0, -1.0;
  a1 << 0.0, 1.0, 1.0, 0.0;
  auto gauge_at = [&](double t) { return Mat(a0 + t * a1); };
  const Mat ref = holonomy(gauge_at, 1.0, 4096);
  const double e1 = max_abs(holonomy(gauge_at, 1.0, 16) - ref);
  const double e2 = max_abs(holonomy(gauge_at, 1.0, 32) - ref);
  CAPTURE(e1);
  CAPTURE(e2);
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
  // Later factors sit on the right: compare against an explicit two-step product.
  const Mat two = oracle::propagator(gauge_at(0.25), -0.5) * oracle::propagator(gauge_at(0.75), -0.5);
  CHECK(max_abs(holonomy(gauge_at, 1.0, 2) - two) < 1e-14);
}

TEST_CASE("prediction matches slow Schrodinger evolution and fixes the sign") {
  const Q2SATInstance inst = generate_instance(3, 0.4, ClauseParams{}, 0);
  REQUIRE(inst.m() == 2);
  const SparseHamiltonian h0 = build_h0(inst);
  const SpectrumResult r = ground_and_gap(h0);
  RotationSchedule s;
  s.total_time = 1000.0;
  const StateVector psi0 = basis_state(3, 0);
  const EvolutionResult ev = evolve_rotating(h0, s, psi0, r.ground_basis);
  const StateVector standard =
      predict_final_state(compute_holonomy(r.ground_basis, s).holonomy, psi0, r.ground_basis);
  const StateVector reversed = predict_final_state(
      compute_holonomy(r.ground_basis, s, GaugeConvention::Reversed).holonomy, psi0, r.ground_basis);
  const double f_std = state_fidelity(standard, ev.final_state);
  const double f_rev = state_fidelity(reversed, ev.final_state);
  CAPTURE(f_std);
  CAPTURE(f_rev);
  CHECK(f_std >= 0.999);
  CHECK(f_rev < 0.5);
  // The holonomy mixes the trivial state with the rest of the ground space.
  const Measurement m = measure_against_basis(standard, r.ground_basis);
  CHECK(m.trivial_probability < 1.0 - 1e-3);
}

TEST_CASE("holonomy transforms covariantly under a change of basis") {
  std::mt19937_64 rng(54);
  ClauseParams c;
  c.beta = oracle::random_beta(rng);
  const SpectrumResult r = ground_of(generate_instance(4, 0.5, c, 9));
  const Eigen::Index g = static_cast<Eigen::Index>(r.ground_basis.size());
  Mat raw(g, g);
  std::normal_distribution<double> nd;
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j) raw(i, j) = cplx(nd(rng), nd(rng));
  const Mat v = Eigen::HouseholderQR<Mat>(raw).householderQ();
  const GroundBasis rotated = r.ground_basis.transformed(v);
  RotationSchedule s;
  s.total_time = 9.0;
  const Mat u = compute_holonomy(r.ground_basis, s).holonomy;
  const Mat u2 = compute_holonomy(rotated, s).holonomy;
  CHECK(max_abs(u2.transpose() - v.adjoint() * u.transpose() * v) < 1e-11);
  const StateVector psi0 = r.ground_basis.combine(oracle::random_state(g, rng));
  const StateVector p1 = predict_final_state(u, psi0, r.ground_basis);
  const StateVector p2 = predict_final_state(u2, psi0, rotated);
  CHECK(state_fidelity(p1, p2) > 1.0 - 1e-12);
}

TEST_CASE("prediction input checks") {
  const SpectrumResult r = ground_of(Q2SATInstance(3, {{0, 1}, {1, 2}}, ClauseParams{}));
  const Mat id = Mat::Identity(4, 4);
  const StateVector psi0 = basis_state(3, 0);
  CHECK(state_fidelity(predict_final_state(id, psi0, r.ground_basis), psi0) > 1.0 - 1e-14);
  CHECK_THROWS_AS(predict_final_state(Mat::Identity(3, 3), psi0, r.ground_basis), ParameterError);
  StateVector outside = StateVector::Zero(8);
  outside[1] = outside[2] = std::sqrt(0.5);  // the excited |Phi> component on (0, 1)
  CHECK_THROWS_AS(predict_final_state(id, outside, r.ground_basis), ParameterError);
  CHECK_THROWS_AS(gauge_matrix(GroundBasis(3), RotationSchedule{}), ParameterError);
  Mat skew = Mat::Identity(8, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(gauge_matrix(GroundBasis::from_columns(3, skew), RotationSchedule{}),
                  ParameterError);
}

}  // TEST_SUITE
