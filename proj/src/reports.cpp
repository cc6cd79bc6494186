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


#include "q2sat/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include <json.hpp>

namespace q2sat {

using json = nlohmann::ordered_json;

namespace {

json probability_list(const std::vector<double>& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  json out = json::array();
  for (std::size_t k : order) out.push_back({{"index", k}, {"probability", p[k]}});
  return out;
}

json instance_header(const Q2SATInstance& inst) {
  return {{"digest", instance_digest(inst)},
          {"n", inst.n()},
          {"m", inst.m()},
          {"seed", inst.seed()},
          {"density", inst.density()},
          {"beta", {{"re", inst.clause().beta.real()}, {"im", inst.clause().beta.imag()}}},
          {"delta", inst.clause().delta}};
}

json measurement_json(const Measurement& m) {
  return {{"ground_fidelity", m.ground_fidelity},
          {"trivial_probability", m.trivial_probability},
          {"probability_all_zero", m.probability_all_zero},
          {"probability_all_one", m.probability_all_one},
          {"probabilities", probability_list(m.probabilities)}};
}

}  // namespace

std::string instance_digest(const Q2SATInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string spectrum_report(const Q2SATInstance& inst, const SpectrumResult& res,
                            std::optional<double> wall_time_ms) {
  json j;
  j["instance"] = instance_header(inst);
  j["n"] = inst.n();
  j["seed"] = inst.seed();
  j["m"] = inst.m();
  j["ground_energy"] = res.ground_energy;
  j["degeneracy"] = res.degeneracy;
  if (res.gap_delta) {
    j["gap_delta"] = *res.gap_delta;
    j["inv_sq_gap"] = *res.gap_delta > 0 ? 1.0 / (*res.gap_delta * *res.gap_delta) : 0.0;
  } else {
    j["gap_delta"] = nullptr;
    j["inv_sq_gap"] = nullptr;
  }
  j["method"] = to_string(res.method);
  j["ambiguous"] = res.ambiguous;
  j["degeneracy_tol"] = res.degeneracy_tol;
  j["residual_tol"] = res.residual_tol;
  j["max_residual"] = res.max_residual;
  j["components"] = res.components;
  j["sectors_solved"] = res.sectors_solved;
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j.dump(2) + "\n";
}

std::string evolution_report(const Q2SATInstance& inst, const EvolutionResult& ev,
                             std::optional<double> wall_time_ms) {
  json j;
  j["instance"] = instance_header(inst);
  j["T"] = ev.schedule.total_time;
  j["axis"] = {ev.schedule.axis.x(), ev.schedule.axis.y(), ev.schedule.axis.z()};
  j["direction"] = ev.schedule.direction;
  j["steps"] = ev.steps;
  j["frame"] = to_string(ev.frame);
  const json m = measurement_json(ev.measurement);
  for (auto it = m.begin(); it != m.end(); ++it) j[it.key()] = it.value();
  j["norm_drift"] = ev.norm_drift;
  if (!ev.checkpoints.empty()) {
    json rows = json::array();
    for (const Checkpoint& c : ev.checkpoints)
      rows.push_back({{"t", c.time},
                      {"norm", c.norm},
                      {"energy", c.energy},
                      {"ground_fidelity", c.ground_fidelity},
                      {"leakage", c.leakage}});
    j["checkpoints"] = rows;
  }
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j.dump(2) + "\n";
}

void write_checkpoints_csv(const std::vector<Checkpoint>& rows, std::ostream& os) {
  os << "t,norm,energy,ground_fidelity,leakage\n";
  char buf[160];
  for (const Checkpoint& c : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", c.time, c.norm, c.energy,
                  c.ground_fidelity, c.leakage);
    os << buf;
  }
}

std::string holonomy_report(const Q2SATInstance& inst, const HolonomyCheck& check) {
  json j;
  j["instance"] = instance_header(inst);
  j["g"] = check.holonomy.holonomy.rows();
  j["T"] = check.total_time;
  j["convention"] = to_string(check.convention);
  j["path_steps"] = check.holonomy.steps;
  j["unitarity_error"] = check.holonomy.unitarity_error;
  const Eigen::MatrixXcd& a = check.holonomy.gauge;
  j["gauge_hermiticity_error"] =
      a.size() ? (a - a.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (check.fidelity_vs_evolution) {
    j["fidelity_vs_evolution"] = *check.fidelity_vs_evolution;
    j["evolution_frame"] = to_string(*check.evolution_frame);
  } else {
    j["fidelity_vs_evolution"] = nullptr;
  }
  j["predicted"] = measurement_json(check.predicted);
  return j.dump(2) + "\n";
}

}  // namespace q2sat
