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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "q2sat/dynamics.hpp"
#include "q2sat/holonomy.hpp"
#include "q2sat/instance.hpp"
#include "q2sat/spectrum.hpp"

namespace q2sat {

/// FNV-1a 64-bit hash of the canonical instance text, as 16 hex digits.
std::string instance_digest(const Q2SATInstance& inst);

/// Timings are only written when given, so reports without them are
/// reproducible byte for byte.
std::string spectrum_report(const Q2SATInstance& inst, const SpectrumResult& res,
                            std::optional<double> wall_time_ms = std::nullopt);

std::string evolution_report(const Q2SATInstance& inst, const EvolutionResult& ev,
                             std::optional<double> wall_time_ms = std::nullopt);

void write_checkpoints_csv(const std::vector<Checkpoint>& rows, std::ostream& os);

struct HolonomyCheck {
  GaugeHolonomy holonomy;
  GaugeConvention convention = GaugeConvention::Standard;
  double total_time = 0.0;
  /// Predicted ground-space probabilities of the final state.
  Measurement predicted;
  /// Fidelity of the prediction with a full evolution, when one was run.
  std::optional<double> fidelity_vs_evolution;
  std::optional<Frame> evolution_frame;
};

std::string holonomy_report(const Q2SATInstance& inst, const HolonomyCheck& check);

}  // namespace q2sat
