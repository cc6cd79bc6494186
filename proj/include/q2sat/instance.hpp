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

#include <complex>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace q2sat {

using cplx = std::complex<double>;

/// Parameters shared by every clause |Phi> = alpha|1_a 0_b> + beta|0_a 1_b>.
/// alpha is taken real and non-negative.
struct ClauseParams {
  cplx beta{0.70710678118654752440, 0.0};
  double delta = 1.0;

  double alpha() const;
  /// Throws ParameterError when |beta| > 1 or delta <= 0.
  void validate() const;

  bool operator==(const ClauseParams&) const = default;
};

struct Edge {
  int a = 0;
  int b = 0;
  auto operator<=>(const Edge&) const = default;
};

/// A Q2SAT instance with identical clauses on a simple graph. Edges are kept
/// sorted lexicographically; construction validates every invariant.
class Q2SATInstance {
 public:
  Q2SATInstance(int n, std::vector<Edge> edges, ClauseParams clause,
                std::uint64_t seed = 0, double density = 0.0);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const ClauseParams& clause() const noexcept { return clause_; }
  std::uint64_t seed() const noexcept { return seed_; }
  double density() const noexcept { return density_; }

  bool operator==(const Q2SATInstance&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  ClauseParams clause_;
  std::uint64_t seed_;
  double density_;
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_uniform(std::uint64_t bits);

/// Erdos-Renyi graph: every pair (a, b), a < b, visited lexicographically and
/// kept when a uniform draw from mt19937_64(seed) falls below d.
Q2SATInstance generate_instance(int n, double d, const ClauseParams& clause,
                                std::uint64_t seed);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Q2SATInstance& inst);

/// Single-qubit state u|0> + v|1>.
struct QubitState {
  cplx u{1.0, 0.0};
  cplx v{0.0, 0.0};
};

using ProductAssignment = std::vector<QubitState>;

struct ProductSolution {
  ProductAssignment states;
  /// Components (index into connected_components) that hit an inconsistent
  /// constraint and were reset to all-|0>.
  std::vector<int> restarted_components;
};

/// <Phi| (psi_a (x) psi_b) for one clause.
cplx clause_overlap(const ClauseParams& clause, const QubitState& qa,
                    const QubitState& qb);

/// Largest |<Phi_j| psi_a psi_b>| over all clauses.
double max_clause_residual(const Q2SATInstance& inst,
                           const ProductAssignment& states);

/// Classical propagation baseline. Each component's smallest vertex is seeded
/// with `seed_state` and the orthogonality constraint is pushed along edges
/// breadth-first. A component whose propagation becomes inconsistent falls
/// back to the all-|0> assignment, which solves every identical-clause family.
ProductSolution product_solve(
    const Q2SATInstance& inst,
    const QubitState& seed_state = {cplx{0.70710678118654752440, 0.0},
                                    cplx{0.70710678118654752440, 0.0}});

/// Instance file: JSON object {"n", "edges", "beta": {"re","im"}, "delta",
/// "seed", "density"}, floats with 17 significant digits.
std::string format_instance(const Q2SATInstance& inst);
Q2SATInstance parse_instance(const std::string& text);

void write_instance(const Q2SATInstance& inst, const std::filesystem::path& path);
Q2SATInstance read_instance(const std::filesystem::path& path);

}  // namespace q2sat
