// Copyright 2026 The feq Authors
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

#include "feq/beam.hpp"
#include "feq/compiler.hpp"
#include "feq/ladder.hpp"
#include "feq/qubit.hpp"
#include "feq/tomography.hpp"

#include <string>
#include <string_view>
#include <vector>

// JSON and CSV file formats. Loaders throw Error(Parse) on malformed input.
namespace feq {

/// { "l_min": int, "amplitudes": [[re, im], ...] }
std::string state_to_json(const LadderState &state);
LadderState state_from_json(std::string_view text);

/// Inputs plus every derived field.
std::string beam_to_json(const BeamParameters &beam);
BeamParameters beam_from_json(std::string_view text);

/// { "alpha": [re, im], "beta": [re, im] }
std::string qubit_to_json(const QubitState &q);
QubitState qubit_from_json(std::string_view text);

/// [[re, im], ...]
std::string components_to_json(const std::vector<complex> &values);

/// { "elements": [ {"pulse": {"g": [re, im]}} | {"drift": {"quarter_units": k,
///   "meters": x}} ], "global_phase": [re, im] }
std::string schedule_to_json(const Schedule &schedule);
Schedule schedule_from_json(std::string_view text);

/// { "state": ..., "residual": r, "restarts": n, "seed": s }
std::string reconstruction_to_json(const Reconstruction &rec);
Reconstruction reconstruction_from_json(std::string_view text);

/// One phase per line.
std::string eigenphases_to_csv(const std::vector<double> &phases);
std::vector<double> eigenphases_from_csv(std::string_view text);

} // namespace feq
