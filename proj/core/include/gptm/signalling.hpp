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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gptm/config.hpp"

namespace gptm {

/// Trap-release protocol geometry: Alice's mass m_A sits in a two-branch
/// superposition with branch separation d, Bob's probe mass m_B is a
/// distance L away (d << L, m_B << m_A are soft expectations, reported as
/// warnings).
struct ProtocolParams {
  double m_a = 1.0;    // kg
  double m_b = 1e-3;   // kg
  double d = 0.05;     // m
  double L = 1.0;      // m
  double t_a = 1e-12;  // s, Alice's recombination time
  double t_b = 1e-12;  // s, Bob's entangling time
};

struct ProtocolState {
  Eigen::MatrixXcd density;   // 4x4 on A (x) B, branch basis
  double branch_overlap = 1.0;  // <L_B|R_B> at t = T_B
  double visibility = 1.0;      // |2 offdiag(rho_A)| in the +/- basis
  std::vector<std::string> warnings;
};

struct SignallingReport {
  ProtocolParams params;
  double visibility_no_release = 1.0;
  double visibility_release = 1.0;
  double trace_distance_alice = 0.0;  // between Alice's two reduced states
  double light_crossing_time = 0.0;   // L / c
  double entangling_phase = 0.0;      // branch phase gap accrued over T_B
  bool entangling_time_ok = false;    // phase gap reaches pi within T_B
  bool superluminal = false;  // T_A + T_B < L/c and trace distance > threshold
  double distinguishability_threshold = 0.25;
  std::vector<std::string> warnings;
};

/// The no-field-state model: if Bob keeps the trap, the joint state stays
/// (|L>+|R>)|0>/sqrt(2) and Alice sees full interference. If he releases it,
/// branch-dependent phases drive <L_B|R_B> from 1 towards 0 (pure dephasing
/// interpolation: overlap(t) = cos(min(gap, pi) t / (2 T_B)), so the ideal
/// case reaches the maximally entangled state at t = T_B).
ProtocolState run_protocol(const ProtocolParams& p, bool bob_releases,
                           const PhysicalConstants& consts = {});

SignallingReport assess_superluminality(const ProtocolParams& p,
                                        const PhysicalConstants& consts = {});

}  // namespace gptm
