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
#include <sstream>

#include "oracles.hpp"
#include "q2sat/chain.hpp"
#include "q2sat/error.hpp"
#include "q2sat/spectrum.hpp"

using namespace q2sat;

TEST_SUITE("chain") {

TEST_CASE("dispersion examples") {
  const double pi = std::numbers::pi;
  CHECK(small_beta_reference_dispersion(0.1, 0.0) == doctest::Approx(0.3));
  CHECK(small_beta_reference_dispersion(0.1, pi) == doctest::Approx(0.7));
  CHECK(balanced_reference_dispersion(0.0) == 2.0);
  CHECK(std::abs(balanced_reference_dispersion(pi)) < 1e-15);
  CHECK(balanced_reference_dispersion(pi / 2, 3.0) == doctest::Approx(3.0));
  // The exact band reduces to the balanced form at beta = sqrt(1/2).
  for (double k : {0.0, 0.4, 1.3, 2.9})
    CHECK(one_magnon_dispersion(std::sqrt(0.5), k) ==
          doctest::Approx(balanced_reference_dispersion(k)).epsilon(1e-14));
  CHECK(one_magnon_dispersion(0.0, 1.0) == 1.0);
}

TEST_CASE("periodic one-magnon band follows the cosine law") {
  for (int n : {3, 4, 7, 10}) {
    for (double beta : {0.05, 0.3, std::sqrt(0.5), 0.9}) {
      ChainSpec spec;
      spec.n = n;
      spec.beta = beta;
      spec.delta = 1.5;
      const Eigen::VectorXd band = one_magnon_band(spec);
      std::vector<double> want;
      for (int j = 0; j < n; ++j)
        want.push_back(one_magnon_dispersion(beta, 2.0 * std::numbers::pi * j / n, 1.5));
      std::sort(want.begin(), want.end());
      for (int j = 0; j < n; ++j) CHECK(std::abs(band[j] - want[j]) < 1e-12);
    }
  }
}

TEST_CASE("one-magnon block matches the full operator restricted to one flip") {
  for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
    ChainSpec spec;
    spec.n = 5;
    spec.beta = 0.4;
    spec.boundary = b;
    const oracle::Mat full = oracle::dense(build_chain_hamiltonian(spec));
    const Eigen::MatrixXcd block = one_magnon_block(spec);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(std::abs(block(i, j) - full(Eigen::Index{1} << i, Eigen::Index{1} << j)) < 1e-15);
  }
}

TEST_CASE("two sites: one bond, unit gap") {
  ChainSpec spec;
  spec.n = 2;
  CHECK(spec.bonds().size() == 1);
  CHECK(one_magnon_gap(spec) == doctest::Approx(1.0));
  spec.boundary = Boundary::Open;
  CHECK(one_magnon_gap(spec) == doctest::Approx(1.0));
  spec.n = 3;
  spec.boundary = Boundary::Periodic;
  CHECK(spec.bonds().size() == 3);
}

TEST_CASE("one-magnon gap is the gap of the whole chain") {
  for (Boundary b : {Boundary::Open, Boundary::Periodic}) {
    for (double beta : {0.1, 0.5, std::sqrt(0.5)}) {
      for (int n = 2; n <= 12; ++n) {
        ChainSpec spec;
        spec.n = n;
        spec.beta = beta;
        spec.boundary = b;
        const SpectrumResult r = ground_and_gap(build_chain_hamiltonian(spec));
        REQUIRE(r.gap_delta);
        CAPTURE(n);
        CAPTURE(beta);
        CAPTURE(to_string(b));
        CHECK(std::abs(one_magnon_gap(spec) - *r.gap_delta) < 1e-8);
      }
    }
  }
}

TEST_CASE("balanced gap shrinks with length") {
  // Periodic chains of one parity, and open chains of any length.
  double last_even = 10.0, last_odd = 10.0, last_open = 10.0;
  for (int n = 3; n <= 40; ++n) {
    ChainSpec spec;
    spec.n = n;
    const double g = one_magnon_gap(spec);
    double& last = n % 2 ? last_odd : last_even;
    CHECK(g < last);
    last = g;
    const double expect = n % 2 ? 1.0 - std::cos(std::numbers::pi / n)
                                : 1.0 - std::cos(2.0 * std::numbers::pi / n);
    CHECK(std::abs(g - expect) < 1e-12);
    spec.boundary = Boundary::Open;
    const double go = one_magnon_gap(spec);
    CHECK(go < last_open);
    last_open = go;
  }
}

TEST_CASE("balanced periodic gap closes as n^-2") {
  const auto rows = chain_gap_table({8, 16, 32, 64}, {std::sqrt(0.5)}, Boundary::Periodic);
  const FitResult f = fit_gap_exponent(rows);
  CHECK(f.slope > -2.2);
  CHECK(f.slope < -1.8);
  CHECK(rows.size() == 4);
}

TEST_CASE("small-beta gap follows the exact band") {
  ChainSpec spec;
  spec.beta = 0.01;
  spec.n = 8;
  const double alpha = std::sqrt(1.0 - 1e-4);
  CHECK(std::abs(one_magnon_gap(spec) - (1.0 - 2.0 * alpha * 0.01)) < 1e-12);
}

TEST_CASE("input validation") {
  ChainSpec spec;
  spec.n = 1;
  CHECK_THROWS_AS(one_magnon_band(spec), ParameterError);
  spec.n = 4;
  spec.beta = 1.5;
  CHECK_THROWS_AS(spec.validate(), ParameterError);
  CHECK_THROWS_AS(parse_boundary("ring"), ParameterError);
  CHECK(parse_boundary("open") == Boundary::Open);
  CHECK(parse_boundary("periodic") == Boundary::Periodic);
}

TEST_CASE("CSV layout") {
  const auto rows = chain_gap_table({4, 6}, {0.5}, Boundary::Open);
  std::ostringstream os;
  write_chain_csv(rows, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,beta,boundary,gap");
  std::getline(is, line);
  CHECK(line.rfind("4,0.5,open,", 0) == 0);
  int count = 1;
  while (std::getline(is, line)) ++count;
  CHECK(count == 2);
}

}  // TEST_SUITE
