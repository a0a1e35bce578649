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
#include <optional>
#include <vector>

#include "gptm/system.hpp"

namespace gptm {

enum class SeparabilityMethod {
  PPT,        // quantum factors only: partial-transpose eigenvalues
  LP,         // finite extreme sets: exact cone-membership feasibility
  LPSampled,  // quantum factors: sampled product dictionary with refresh
};

enum class Verdict { Separable, Entangled, Inconclusive };

/// Every hard verdict ships a checkable artifact: Separable carries an
/// explicit decomposition reproducing the state (exactly up to the LP
/// tolerance in the generic case; for sampled-LP runs on boundary states in
/// 2x2 and 2x3, where positivity of the partial transpose is itself a proof
/// of separability, the attached decomposition is the best one found and
/// `reconstruction_error` reports its true residual), Entangled carries
/// either a negative partial-transpose eigenvalue (as `negativity`) or a
/// witness functional strictly separating the state from the product
/// dictionary. Ties at the tolerance boundary are Inconclusive, never a hard
/// verdict.
struct SeparabilityCertificate {
  Verdict verdict = Verdict::Inconclusive;

  struct Term {
    double weight;
    State on_a;
    State on_b;
  };
  std::optional<std::vector<Term>> decomposition;
  double reconstruction_error = 0.0;

  struct Witness {
    Eigen::VectorXd functional;    // linear part, on the composite space
    double max_on_products = 0.0;  // m = max over the product dictionary
    double value_on_state = 0.0;   // v; entangled iff v - m > tol
  };
  std::optional<Witness> witness;

  double negativity = 0.0;  // PPT route only
};

struct SeparabilityOptions {
  SeparabilityMethod method = SeparabilityMethod::LPSampled;
  double tol = 0.0;  // 0 -> tolerances().cone
  std::uint64_t seed = 0;
  int dictionary_size = 0;   // 0 -> Limits::lp_dictionary_size
  int refresh_rounds = 0;    // 0 -> Limits::lp_refresh_rounds
  // Extra product states to seed the dictionary with (e.g. terms already
  // known from an LOCC decomposition). Pairs of (state on A, state on B).
  std::vector<std::pair<State, State>> seed_dictionary;
};

SeparabilityCertificate is_separable(const State& state,
                                     const SeparabilityOptions& opts = {});

/// LP-dual witness search over an explicit product dictionary. Returns the
/// certificate witness with W(dictionary) <= m and W(state) = v > m + tol
/// when separation succeeds; nullopt when the state is (numerically) inside
/// the sampled hull.
std::optional<SeparabilityCertificate::Witness> find_witness(
    const State& state, const std::vector<std::pair<State, State>>& dictionary,
    double tol = 0.0);

}  // namespace gptm
