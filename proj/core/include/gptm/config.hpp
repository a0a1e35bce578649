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

#include <cstdint>

namespace gptm {

/// Global numeric tolerances.
///
/// Two regimes: `algebraic` for identities that only accumulate double
/// round-off (orthonormality, bilinearity, branch sums), `cone` for
/// LP/eigenvalue based cone-membership checks where solver slack dominates.
struct Tolerances {
  double algebraic = 1e-12;
  double cone = 1e-9;
};

Tolerances& tolerances();

/// Knobs that bound eager enumeration.
struct Limits {
  // Above this sample-space size the resolution of the identity is only
  // available branch-by-branch, not as an eager Instrument.
  int roi_eager_cap = 64;
  // Hard cap on the number of outcome trajectories enumerated by
  // locc_decompose: n^(2*rounds) must stay below this.
  std::uint64_t trajectory_cap = 1000000;
  // Haar-random pure states sampled as extreme-state generators of a
  // quantum system (the state space is not a polytope; this sample is a
  // heuristic generator list used for validation sampling only).
  int quantum_state_sample = 200;
  // Product-state dictionary size for the sampled separability LP.
  int lp_dictionary_size = 500;
  int lp_refresh_rounds = 50;
};

Limits& limits();

/// Compiled-in CODATA values; overridable for unit-system tests.
struct PhysicalConstants {
  double newton_g = 6.67430000000e-11;   // m^3 kg^-1 s^-2
  double hbar = 1.05457181765e-34;       // J s
  double light_speed = 2.99792458000e8;  // m s^-1
};

}  // namespace gptm
