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
#include <memory>
#include <vector>

#include "gptm/errors.hpp"

namespace gptm {

class System;
using SystemPtr = std::shared_ptr<const System>;

enum class SystemKind { Classical, Quantum, Composite, Custom };

/// A finite-dimensional GPT system: a real vector space carrying a convex
/// state space, a dual effect space and a distinguished unit ("discard")
/// effect. Immutable after construction; all operations on it are pure.
///
/// Coordinate conventions:
///  - Classical(n): R^n, extreme states are the standard basis (delta
///    distributions), unit effect is the all-ones covector.
///  - Quantum(d): R^{d^2} in the normalized identity-first Gell-Mann basis;
///    unit effect is sqrt(d) on coordinate 0 (the trace functional).
///  - Composite(L, R): tensor product of the factor spaces, left factor index
///    varies slowest. Coordinates are products of factor coordinates (for two
///    quantum factors this is the product Hermitian basis, not the Gell-Mann
///    basis of the joint Hilbert space).
class System : public std::enable_shared_from_this<System> {
 public:
  static SystemPtr classical(int n);
  static SystemPtr quantum(int d);
  static SystemPtr composite(SystemPtr left, SystemPtr right);
  static SystemPtr custom(std::vector<Eigen::VectorXd> extreme_states,
                          std::vector<Eigen::VectorXd> extremal_effects,
                          Eigen::VectorXd unit_effect);

  SystemKind kind() const { return kind_; }
  int dim() const { return dim_; }

  /// Sample-space size (Classical) or Hilbert dimension (Quantum).
  int param() const { return param_; }

  const SystemPtr& left() const { return left_; }
  const SystemPtr& right() const { return right_; }

  const Eigen::VectorXd& unit_effect_coeffs() const { return unit_effect_; }

  /// Generators of the normalized state space. For quantum systems this is a
  /// deterministic Haar sample (the exact membership test is the PSD check,
  /// see cone_contains); for composites it is the product of factor
  /// generators, subsampled when the full product would be large.
  const std::vector<Eigen::VectorXd>& extreme_states() const {
    return extreme_states_;
  }

  /// Extremal effects stored explicitly. For Classical(n) with n <= 12 these
  /// are the 2^n hypercube vertices; above that only the atomic effects plus
  /// zero/unit are materialized (the hypercube factorizes over atomic-effect
  /// values, so validation never needs the full vertex list). For quantum
  /// systems the effect set is not a polytope and the list holds a generating
  /// sample.
  const std::vector<Eigen::VectorXd>& extremal_effects() const {
    return extremal_effects_;
  }

  /// True if the state space is a simplex with delta extreme states: a
  /// Classical system or a composite of simplex systems. Only these admit a
  /// resolution of the identity.
  bool is_simplex() const;

  /// True if coordinates describe density operators: a Quantum system or a
  /// composite of quantum-like systems.
  bool is_quantum_like() const;

  /// Sample-space size for simplex systems (= dim).
  int sample_space_size() const;

  /// Hilbert-space dimension for quantum-like systems (product over factors).
  int hilbert_dim() const;

 private:
  System() = default;

  SystemKind kind_ = SystemKind::Custom;
  int dim_ = 0;
  int param_ = 0;
  SystemPtr left_, right_;
  std::vector<Eigen::VectorXd> extreme_states_;
  std::vector<Eigen::VectorXd> extremal_effects_;
  Eigen::VectorXd unit_effect_;
};

/// Structural equality (same kind, dim and factor structure).
bool same_system(const SystemPtr& a, const SystemPtr& b);

enum class DiscardBehaviour { Preserving, NonIncreasing };

struct State {
  SystemPtr system;
  Eigen::VectorXd coeffs;

  double norm() const { return system->unit_effect_coeffs().dot(coeffs); }
};

struct Effect {
  SystemPtr system;
  Eigen::VectorXd coeffs;
};

/// A linear map between system spaces, as a matrix on coordinates.
struct Transformation {
  SystemPtr input;
  SystemPtr output;
  Eigen::MatrixXd matrix;  // output.dim x input.dim
  DiscardBehaviour behaviour = DiscardBehaviour::NonIncreasing;

  State apply(const State& s) const;
};

/// A collection of non-increasing branches summing to a preserving map.
struct Instrument {
  std::vector<Transformation> branches;

  Transformation branch_sum() const;
};

Effect unit_effect(const SystemPtr& sys);
Effect zero_effect(const SystemPtr& sys);

/// Dual pairing: the outcome probability of `effect` on `state`.
double evaluate(const Effect& effect, const State& state);

/// Exact-up-to-tolerance membership of `coeffs` in the (sub-normalized) state
/// cone of `sys`. Dispatches on structure: nonnegativity for simplex systems,
/// PSD for quantum-like systems, blockwise recursion when one composite
/// factor is classical, and nonnegative-combination feasibility over product
/// extreme points otherwise (the minimal tensor product).
bool cone_contains(const SystemPtr& sys, const Eigen::VectorXd& coeffs,
                   double tol);

/// Largest violation magnitude of the membership conditions (0 when inside).
double cone_violation(const SystemPtr& sys, const Eigen::VectorXd& coeffs);

}  // namespace gptm
