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

#include <optional>
#include <vector>

#include "gptm/system.hpp"

namespace gptm {

/// An interaction between A and B mediated by G: the field starts in
/// `initial_field`, each round first couples A to G then B to G, and the
/// field is finally hit with `final_field_effect` (discard when absent).
///
/// Wire layout inside the tripartite space is canonically A (x) G (x) B;
/// round maps are stored on the composites they act on (I_A on A (x) G,
/// I_B on B (x) G) and routed with explicit wire permutations.
struct MediatedCircuit {
  SystemPtr a, b, g;
  State initial_field;
  struct Round {
    Transformation on_ag;  // Preserving, on A (x) G
    Transformation on_bg;  // Preserving, on B (x) G
  };
  std::vector<Round> rounds;
  std::optional<Effect> final_field_effect;
};

/// One outcome trajectory of the identity-resolution insertion: the pair of
/// local non-increasing maps it induces on A and on B.
struct ProductMapTerm {
  std::vector<int> trajectory;  // (a_1, b_1, ..., a_R, b_R)
  Transformation map_a;
  Transformation map_b;
};

/// Runs the circuit on a (possibly sub-normalized) A (x) B state. The result
/// is sub-normalized when the final effect post-selects.
State apply_circuit(const MediatedCircuit& c, const State& input);

/// The induced linear map on A (x) B as a single matrix (dense contraction
/// of the tripartite wiring; independent of locc_decompose).
Eigen::MatrixXd circuit_matrix(const MediatedCircuit& c);

/// The LOCC decomposition: inserts a resolution of the identity on G after
/// every interaction, enumerates outcome trajectories depth-first (pruning
/// exactly-zero branches) and returns one product-map term per trajectory.
/// Requires a simplex G; throws NotClassical otherwise and TrajectoryBlowup
/// past Limits::trajectory_cap.
std::vector<ProductMapTerm> locc_decompose(const MediatedCircuit& c);

/// sum_f map_a^f (x) map_b^f as one transformation on A (x) B.
Transformation reconstruct_channel(const std::vector<ProductMapTerm>& terms);

/// A classically controlled *global* interaction: sum_x p_x branch_x, where p
/// is the control state of a classical G and each branch acts jointly on
/// A (x) B. This deliberately breaks the mediation structure (the field acts
/// non-locally on both systems).
Transformation build_nonmediated_circuit(
    const State& control, const std::vector<Transformation>& branch_maps);

}  // namespace gptm
