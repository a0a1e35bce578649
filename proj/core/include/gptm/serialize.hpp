// Copyright 2026 The gptm authors.
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

#include <nlohmann/json.hpp>

#include "gptm/circuit.hpp"
#include "gptm/scenarios.hpp"
#include "gptm/separability.hpp"
#include "gptm/signalling.hpp"
#include "gptm/system.hpp"
#include "gptm/validate.hpp"

// JSON wire formats. Field names are fixed by schemas/gptm-objects.schema.json;
// matrices are row-major flat arrays, complex matrices interleave re/im.
// Doubles are emitted with enough digits to round-trip exactly, so replaying
// a serialized object is bit-faithful.

namespace gptm {

using json = nlohmann::ordered_json;

json system_to_json(const SystemPtr& sys);
SystemPtr system_from_json(const json& j);

json state_to_json(const State& s);
State state_from_json(const json& j);

json effect_to_json(const Effect& e);
Effect effect_from_json(const json& j);

json transformation_to_json(const Transformation& t);
Transformation transformation_from_json(const json& j);

json circuit_to_json(const MediatedCircuit& c);
MediatedCircuit circuit_from_json(const json& j);

json certificate_to_json(const SeparabilityCertificate& c);
json validation_report_to_json(const ValidationReport& r);
json no_go_report_to_json(const NoGoReport& r);
json condition_profile_to_json(const ConditionProfile& p);
json signalling_report_to_json(const SignallingReport& r);

/// Canonical text rendering (includes trailing newline). All CLI output goes
/// through this so byte-identity across runs is a single code path.
std::string dump_canonical(const json& j);

}  // namespace gptm
