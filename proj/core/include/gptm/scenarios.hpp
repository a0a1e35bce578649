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
#include <string>

#include "gptm/circuit.hpp"
#include "gptm/config.hpp"
#include "gptm/system.hpp"

namespace gptm {

struct NoGoConfig {
  int trials = 1000;
  int dim_a = 2;  // Hilbert dimension of A (quantum matter)
  int dim_b = 2;
  int g_size = 2;  // classical mediator sample-space size
  int rounds = 2;
  std::uint64_t seed = 0;
  double tol = 0.0;  // 0 -> tolerances().cone
  int threads = 1;
};

/// Outcome of the randomized no-entanglement-from-classical-mediation sweep.
/// A failing verdict falsifies the implementation, not the theorem; the
/// worst-case trial is kept for replay.
struct NoGoReport {
  NoGoConfig config;
  int trials_run = 0;
  double max_negativity = 0.0;
  double max_lp_residual = 0.0;
  int lp_failures = 0;
  bool pass = false;
  int worst_trial = -1;
  std::string worst_case_json;  // serialized circuit of the max-negativity trial
};

/// Samples random mediated circuits (classically controlled local channels,
/// classical G) and random product inputs, then certifies every output state
/// separable via both PPT and an LP decomposition.
NoGoReport verify_no_go(const NoGoConfig& cfg);

/// Sample one trial's circuit + product input deterministically from
/// (seed, trial). Exposed for replay and for the scenario demos.
struct NoGoTrial {
  MediatedCircuit circuit;
  State input;  // product state on A (x) B
};
NoGoTrial make_no_go_trial(const NoGoConfig& cfg, int trial);

/// Two masses, each in a two-branch spatial superposition, accrue
/// branch-dependent Newtonian phases phi_ij = G m_A m_B T / (hbar r_ij).
/// Collinear geometry: r_LL = r_RR = L, r_LR = L + d, r_RL = L - d.
struct BmvResult {
  Eigen::MatrixXcd density;  // 4x4, branch basis (LL, LR, RL, RR)
  State state;               // same state in GPT coordinates on qubit (x) qubit
  double phase_gap = 0.0;    // phi_LL + phi_RR - phi_LR - phi_RL
  double negativity = 0.0;
};

BmvResult bmv_protocol(double m_a, double m_b, double d, double L, double T,
                       const PhysicalConstants& consts = {});

/// Same final state driven directly by the four branch phases.
BmvResult bmv_from_phases(double phi_ll, double phi_lr, double phi_rl,
                          double phi_rr);

/// Dephasing in the branch basis with off-diagonal damping e^{-lambda}.
/// lambda = 0 is the identity; lambda -> inf kills all coherences.
Transformation collapse_channel(double lambda);

/// bmv_protocol followed by the collapse channel on each mass.
BmvResult bmv_with_collapse(double phase_gap, double lambda);

/// A strictly mediated two-round circuit with a *quantum* mediator realizing
/// the branch-dependent phases: G starts in |0>, round 1 copies A's branch
/// onto G (CNOT) and applies the controlled phase between G and B, round 2
/// uncopies G. Entangles A and B through G alone.
MediatedCircuit quantum_mediator_circuit(double phi_ll, double phi_lr,
                                         double phi_rl, double phi_rr);

enum class Model { CollapseDecoherence, NonMediated, NonClassicalG };

/// Which of the three no-go conditions a model class meets, together with a
/// measured demonstration. At least one condition is violated for every
/// consistent model.
struct ConditionProfile {
  Model model;
  std::string name;
  bool condition1_met = false;  // generates entanglement
  bool condition2_met = false;  // interaction is mediated
  bool condition3_met = false;  // mediator is classical
  double demo_negativity = 0.0;
  std::string demo_description;
};

ConditionProfile classify_model(Model model);

}  // namespace gptm
