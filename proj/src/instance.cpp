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


#include "q2sat/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "q2sat/error.hpp"

namespace q2sat {

double ClauseParams::alpha() const {
  return std::sqrt(std::max(0.0, 1.0 - std::norm(beta)));
}

void ClauseParams::validate() const {
  if (!(std::abs(beta) <= 1.0 + 1e-15))
    throw ParameterError("beta out of range: |beta| must be <= 1");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("delta must be a positive finite number");
}

Q2SATInstance::Q2SATInstance(int n, std::vector<Edge> edges, ClauseParams clause,
                             std::uint64_t seed, double density)
    : n_(n), edges_(std::move(edges)), clause_(clause), seed_(seed),
      density_(density) {
  if (n_ < 2) throw ParameterError("instance needs n >= 2 qubits");
  if (n_ > 30) throw ParameterError("instance size limited to n <= 30 qubits");
  clause_.validate();
  for (const Edge& e : edges_) {
    if (e.a == e.b)
      throw ParameterError("self-loop on qubit " + std::to_string(e.a));
    if (e.a < 0 || e.b < 0 || e.a >= n_ || e.b >= n_)
      throw ParameterError("edge endpoint out of range");
    if (e.a > e.b)
      throw ParameterError("edge endpoints must satisfy a < b");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ParameterError("duplicate edge");
}

double unit_uniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Q2SATInstance generate_instance(int n, double d, const ClauseParams& clause,
                                std::uint64_t seed) {
  if (n < 2) throw ParameterError("generate_instance: n must be >= 2");
  if (!(d >= 0.0 && d <= 1.0))
    throw ParameterError("generate_instance: d must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (unit_uniform(rng()) < d) edges.push_back({a, b});
  return Q2SATInstance(n, std::move(edges), clause, seed, d);
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Q2SATInstance& inst) {
  std::vector<int> parent(inst.n());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : inst.edges()) {
    int ra = find_root(parent, e.a);
    int rb = find_root(parent, e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(inst.n(), -1);
  for (int v = 0; v < inst.n(); ++v) {
    int r = find_root(parent, v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

cplx clause_overlap(const ClauseParams& clause, const QubitState& qa,
                    const QubitState& qb) {
  return clause.alpha() * qa.v * qb.u + std::conj(clause.beta) * qa.u * qb.v;
}

double max_clause_residual(const Q2SATInstance& inst,
                           const ProductAssignment& states) {
  double worst = 0.0;
  for (const Edge& e : inst.edges())
    worst = std::max(worst, std::abs(clause_overlap(inst.clause(), states[e.a],
                                                    states[e.b])));
  return worst;
}

namespace {

QubitState normalized(cplx u, cplx v) {
  double norm = std::sqrt(std::norm(u) + std::norm(v));
  return {u / norm, v / norm};
}

// State of the far endpoint forced by one clause. `forward` means the known
// qubit is the clause's `a` side. Returns nullopt when the clause places no
// constraint (both coefficients vanish).
std::optional<QubitState> forced_partner(const ClauseParams& clause,
                                         const QubitState& known, bool forward) {
  const double alpha = clause.alpha();
  const cplx beta_c = std::conj(clause.beta);
  cplx u, v;
  if (forward) {
    u = beta_c * known.u;
    v = -alpha * known.v;
  } else {
    u = alpha * known.u;
    v = -beta_c * known.v;
  }
  if (std::norm(u) + std::norm(v) < 1e-28) return std::nullopt;
  return normalized(u, v);
}

}  // namespace

ProductSolution product_solve(const Q2SATInstance& inst,
                              const QubitState& seed_state) {
  constexpr double kTol = 1e-12;
  const int n = inst.n();
  std::vector<std::vector<std::pair<int, bool>>> adjacency(n);
  for (const Edge& e : inst.edges()) {
    adjacency[e.a].push_back({e.b, true});
    adjacency[e.b].push_back({e.a, false});
  }

  ProductSolution sol;
  sol.states.assign(n, QubitState{});
  const QubitState seed = normalized(seed_state.u, seed_state.v);
  const auto components = connected_components(inst);
  std::vector<char> assigned(n, 0);

  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const auto& comp = components[ci];
    bool consistent = true;
    std::queue<int> frontier;
    sol.states[comp.front()] = seed;
    assigned[comp.front()] = 1;
    frontier.push(comp.front());
    while (!frontier.empty() && consistent) {
      const int q = frontier.front();
      frontier.pop();
      for (auto [other, forward] : adjacency[q]) {
        if (assigned[other]) {
          const QubitState& qa = forward ? sol.states[q] : sol.states[other];
          const QubitState& qb = forward ? sol.states[other] : sol.states[q];
          if (std::abs(clause_overlap(inst.clause(), qa, qb)) > kTol) {
            consistent = false;
            break;
          }
          continue;
        }
        auto partner = forced_partner(inst.clause(), sol.states[q], forward);
        sol.states[other] = partner.value_or(QubitState{});
        assigned[other] = 1;
        frontier.push(other);
      }
    }
    if (!consistent) {
      for (int q : comp) sol.states[q] = QubitState{};
      sol.restarted_components.push_back(static_cast<int>(ci));
    }
  }
  return sol;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

int line_of_key(const std::string& text, const std::string& key) {
  auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

// Line of the `index`-th inner array of the "edges" array.
int line_of_edge(const std::string& text, std::size_t index) {
  auto pos = text.find("\"edges\"");
  if (pos == std::string::npos) return 0;
  pos = text.find('[', pos);
  if (pos == std::string::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '[') {
      ++depth;
      if (depth == 2) {
        if (seen == index) return line_of_offset(text, i);
        ++seen;
      }
    } else if (text[i] == ']') {
      if (--depth == 0) break;
    }
  }
  return line_of_key(text, "edges");
}

using nlohmann::json;

const json& require(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(key, 0, "missing field");
  return *it;
}

double number_field(const json& v, const std::string& name, int line) {
  if (!v.is_number()) throw ParseError(name, line, "expected a number");
  return v.get<double>();
}

}  // namespace

std::string format_instance(const Q2SATInstance& inst) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << inst.n() << ",\n";
  os << "  \"edges\": [";
  for (std::size_t j = 0; j < inst.edges().size(); ++j) {
    const Edge& e = inst.edges()[j];
    os << (j == 0 ? "\n" : ",\n") << "    [" << e.a << ", " << e.b << "]";
  }
  os << (inst.edges().empty() ? "],\n" : "\n  ],\n");
  os << "  \"beta\": {\"re\": " << fmt17(inst.clause().beta.real())
     << ", \"im\": " << fmt17(inst.clause().beta.imag()) << "},\n";
  os << "  \"delta\": " << fmt17(inst.clause().delta) << ",\n";
  os << "  \"seed\": " << inst.seed() << ",\n";
  os << "  \"density\": " << fmt17(inst.density()) << "\n";
  os << "}\n";
  return os.str();
}

Q2SATInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("", 1, "top level must be an object");

  const json& jn = require(doc, "n");
  if (!jn.is_number_integer())
    throw ParseError("n", line_of_key(text, "n"), "expected an integer");
  const int n = jn.get<int>();
  if (n < 2) throw ParseError("n", line_of_key(text, "n"), "n must be >= 2");

  const json& jedges = require(doc, "edges");
  if (!jedges.is_array())
    throw ParseError("edges", line_of_key(text, "edges"), "expected an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t j = 0; j < jedges.size(); ++j) {
    const json& e = jedges[j];
    const std::string field = "edges[" + std::to_string(j) + "]";
    const int line = line_of_edge(text, j);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(field, line, "expected [a, b] integer pair");
    Edge edge{e[0].get<int>(), e[1].get<int>()};
    if (edge.a == edge.b) throw ParseError(field, line, "self-loop");
    if (edge.a < 0 || edge.b < 0 || edge.a >= n || edge.b >= n)
      throw ParseError(field, line, "endpoint out of range");
    if (edge.a > edge.b) throw ParseError(field, line, "endpoints must satisfy a < b");
    if (!seen.insert(edge).second) throw ParseError(field, line, "duplicate edge");
    edges.push_back(edge);
  }

  const json& jbeta = require(doc, "beta");
  const int beta_line = line_of_key(text, "beta");
  if (!jbeta.is_object()) throw ParseError("beta", beta_line, "expected {re, im}");
  ClauseParams clause;
  clause.beta = cplx(number_field(require(jbeta, "re"), "beta.re", beta_line),
                     number_field(require(jbeta, "im"), "beta.im", beta_line));
  if (std::abs(clause.beta) > 1.0 + 1e-15)
    throw ParseError("beta", beta_line, "beta out of range");

  const int delta_line = line_of_key(text, "delta");
  clause.delta = number_field(require(doc, "delta"), "delta", delta_line);
  if (!(clause.delta > 0.0)) throw ParseError("delta", delta_line, "delta must be > 0");

  const json& jseed = require(doc, "seed");
  if (!jseed.is_number_unsigned() && !jseed.is_number_integer())
    throw ParseError("seed", line_of_key(text, "seed"), "expected an integer");
  if (jseed.is_number_integer() && !jseed.is_number_unsigned() &&
      jseed.get<std::int64_t>() < 0)
    throw ParseError("seed", line_of_key(text, "seed"), "seed must be non-negative");
  const auto seed = jseed.get<std::uint64_t>();

  const int density_line = line_of_key(text, "density");
  const double density =
      number_field(require(doc, "density"), "density", density_line);
  if (!(density >= 0.0 && density <= 1.0))
    throw ParseError("density", density_line, "density must lie in [0, 1]");

  return Q2SATInstance(n, std::move(edges), clause, seed, density);
}

void write_instance(const Q2SATInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << format_instance(inst);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Q2SATInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace q2sat
