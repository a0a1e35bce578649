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

#include "gptm/system.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "gptm/config.hpp"
#include "gptm/linalg.hpp"
#include "gptm/nnls.hpp"
#include "gptm/quantum.hpp"

namespace gptm {

namespace {

// Subsampled cross product of two generator lists (deterministic stride).
std::vector<Eigen::VectorXd> product_generators(
    const std::vector<Eigen::VectorXd>& left,
    const std::vector<Eigen::VectorXd>& right, std::size_t cap) {
  std::vector<Eigen::VectorXd> out;
  const std::size_t total = left.size() * right.size();
  const std::size_t step = total <= cap ? 1 : (total + cap - 1) / cap;
  for (std::size_t idx = 0; idx < total; idx += step) {
    const auto i = idx / right.size();
    const auto j = idx % right.size();
    out.push_back(kron_vec(left[i], right[j]));
  }
  return out;
}

}  // namespace

SystemPtr System::classical(int n) {
  if (n < 1) throw InvalidDimension("classical system needs n >= 1");
  auto sys = std::shared_ptr<System>(new System());
  sys->kind_ = SystemKind::Classical;
  sys->dim_ = n;
  sys->param_ = n;
  sys->unit_effect_ = Eigen::VectorXd::Ones(n);
  sys->extreme_states_.reserve(n);
  for (int x = 0; x < n; ++x)
    sys->extreme_states_.push_back(Eigen::VectorXd::Unit(n, x));
  if (n <= 12) {
    // All 2^n hypercube vertices.
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      for (int x = 0; x < n; ++x)
        if (mask & (1ULL << x)) e(x) = 1.0;
      sys->extremal_effects_.push_back(std::move(e));
    }
  } else {
    // The hypercube factorizes over atomic-effect values; atomic effects
    // plus zero and unit suffice for validation.
    sys->extremal_effects_.push_back(Eigen::VectorXd::Zero(n));
    for (int x = 0; x < n; ++x)
      sys->extremal_effects_.push_back(Eigen::VectorXd::Unit(n, x));
    sys->extremal_effects_.push_back(Eigen::VectorXd::Ones(n));
  }
  return sys;
}

SystemPtr System::composite(SystemPtr left, SystemPtr right) {
  if (!left || !right) throw InvalidDimension("composite of null systems");
  auto sys = std::shared_ptr<System>(new System());
  sys->kind_ = SystemKind::Composite;
  sys->dim_ = left->dim() * right->dim();
  sys->param_ = 0;
  sys->unit_effect_ =
      kron_vec(left->unit_effect_coeffs(), right->unit_effect_coeffs());
  sys->extreme_states_ =
      product_generators(left->extreme_states(), right->extreme_states(), 400);
  sys->extremal_effects_ = product_generators(left->extremal_effects(),
                                              right->extremal_effects(), 400);
  sys->left_ = std::move(left);
  sys->right_ = std::move(right);
  return sys;
}

SystemPtr System::custom(std::vector<Eigen::VectorXd> extreme_states,
                         std::vector<Eigen::VectorXd> extremal_effects,
                         Eigen::VectorXd unit_effect) {
  if (extreme_states.empty())
    throw InvalidDimension("custom system needs explicit extreme states");
  const auto dim = unit_effect.size();
  for (const auto& s : extreme_states)
    if (s.size() != dim) throw InvalidDimension("extreme state dim mismatch");
  for (const auto& e : extremal_effects)
    if (e.size() != dim) throw InvalidDimension("extremal effect dim mismatch");
  auto sys = std::shared_ptr<System>(new System());
  sys->kind_ = SystemKind::Custom;
  sys->dim_ = static_cast<int>(dim);
  sys->param_ = 0;
  sys->extreme_states_ = std::move(extreme_states);
  sys->extremal_effects_ = std::move(extremal_effects);
  sys->unit_effect_ = std::move(unit_effect);
  return sys;
}

bool System::is_simplex() const {
  switch (kind_) {
    case SystemKind::Classical:
      return true;
    case SystemKind::Composite:
      return left_->is_simplex() && right_->is_simplex();
    default:
      return false;
  }
}

bool System::is_quantum_like() const {
  switch (kind_) {
    case SystemKind::Quantum:
      return true;
    case SystemKind::Composite:
      return left_->is_quantum_like() && right_->is_quantum_like();
    default:
      return false;
  }
}

int System::sample_space_size() const {
  if (!is_simplex()) throw NotClassical("not a simplex system");
  return dim_;
}

int System::hilbert_dim() const {
  if (kind_ == SystemKind::Quantum) return param_;
  if (kind_ == SystemKind::Composite)
    return left_->hilbert_dim() * right_->hilbert_dim();
  throw SystemMismatch("not a quantum-like system");
}

bool same_system(const SystemPtr& a, const SystemPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->dim() != b->dim() ||
      a->param() != b->param())
    return false;
  if (a->kind() == SystemKind::Composite)
    return same_system(a->left(), b->left()) &&
           same_system(a->right(), b->right());
  if (a->kind() == SystemKind::Custom) {
    // Structural identity for custom systems: same generator lists.
    const auto& sa = a->extreme_states();
    const auto& sb = b->extreme_states();
    if (sa.size() != sb.size()) return false;
    for (std::size_t i = 0; i < sa.size(); ++i)
      if (sa[i] != sb[i]) return false;
    return a->unit_effect_coeffs() == b->unit_effect_coeffs();
  }
  return true;
}

State Transformation::apply(const State& s) const {
  if (!same_system(input, s.system))
    throw SystemMismatch("transformation input system mismatch");
  return State{output, matrix * s.coeffs};
}

Transformation Instrument::branch_sum() const {
  if (branches.empty()) throw ArityMismatch("instrument with no branches");
  Transformation sum = branches.front();
  for (std::size_t i = 1; i < branches.size(); ++i)
    sum.matrix += branches[i].matrix;
  sum.behaviour = DiscardBehaviour::Preserving;
  return sum;
}

Effect unit_effect(const SystemPtr& sys) {
  return Effect{sys, sys->unit_effect_coeffs()};
}

Effect zero_effect(const SystemPtr& sys) {
  return Effect{sys, Eigen::VectorXd::Zero(sys->dim())};
}

double evaluate(const Effect& effect, const State& state) {
  if (!same_system(effect.system, state.system))
    throw SystemMismatch("effect/state system mismatch");
  return effect.coeffs.dot(state.coeffs);
}

double cone_violation(const SystemPtr& sys, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != sys->dim())
    throw SystemMismatch("coefficient dimension mismatch");
  if (sys->is_simplex()) {
    return std::max(0.0, -coeffs.minCoeff());
  }
  if (sys->is_quantum_like()) {
    const Eigen::MatrixXcd op = coeffs_to_operator(sys, coeffs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op,
                                                       Eigen::EigenvaluesOnly);
    return std::max(0.0, -es.eigenvalues().minCoeff());
  }
  if (sys->kind() == SystemKind::Composite) {
    const auto& l = sys->left();
    const auto& r = sys->right();
    // A classical factor splits the state into conditional blocks; each
    // block must lie in the other factor's cone (classically controlled
    // mixtures are the only valid composite states here).
    if (l->is_simplex()) {
      double worst = 0.0;
      for (int x = 0; x < l->dim(); ++x)
        worst = std::max(worst,
                         cone_violation(r, coeffs.segment(x * r->dim(), r->dim())));
      return worst;
    }
    if (r->is_simplex()) {
      double worst = 0.0;
      for (int j = 0; j < r->dim(); ++j) {
        Eigen::VectorXd block(l->dim());
        for (int i = 0; i < l->dim(); ++i) block(i) = coeffs(i * r->dim() + j);
        worst = std::max(worst, cone_violation(l, block));
      }
      return worst;
    }
  }
  // Minimal tensor product / custom: nonnegative-combination feasibility
  // over the stored extreme-state generators.
  const auto& gens = sys->extreme_states();
  Eigen::MatrixXd d(sys->dim(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    d.col(static_cast<Eigen::Index>(i)) = gens[i];
  const auto res = nnls(d, coeffs);
  return res.residual_norm;
}

bool cone_contains(const SystemPtr& sys, const Eigen::VectorXd& coeffs,
                   double tol) {
  return cone_violation(sys, coeffs) <= tol;
}

}  // namespace gptm
