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

#include <string>
#include <vector>

#include "gptm/system.hpp"

namespace gptm {

/// Validation failures are data, not errors: each framework axiom is checked
/// and reported with its worst violation magnitude.
struct ValidationCheck {
  std::string name;
  bool pass = false;
  double violation = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool pass = true;

  void add(std::string name, double violation, double tol);
};

ValidationReport validate_system(const SystemPtr& sys);
ValidationReport validate_state(const State& s);
ValidationReport validate_effect(const Effect& e);
ValidationReport validate_transformation(const Transformation& t);
ValidationReport validate_instrument(const Instrument& instr);

}  // namespace gptm
