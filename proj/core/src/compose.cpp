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

#include "gptm/compose.hpp"

#include "gptm/linalg.hpp"

namespace gptm {

SystemPtr compose(const SystemPtr& a, const SystemPtr& b) {
  return System::composite(a, b);
}

State product_state(const State& a, const State& b) {
  return State{compose(a.system, b.system), kron_vec(a.coeffs, b.coeffs)};
}

Effect product_effect(const Effect& a, const Effect& b) {
  return Effect{compose(a.system, b.system), kron_vec(a.coeffs, b.coeffs)};
}

Transformation product_map(const Transformation& a, const Transformation& b) {
  const auto behaviour = (a.behaviour == DiscardBehaviour::Preserving &&
                          b.behaviour == DiscardBehaviour::Preserving)
                             ? DiscardBehaviour::Preserving
                             : DiscardBehaviour::NonIncreasing;
  return Transformation{compose(a.input, b.input), compose(a.output, b.output),
                        kron(a.matrix, b.matrix), behaviour};
}

Transformation embed_on_factor(const Transformation& t, Side which,
                               const SystemPtr& composite) {
  if (composite->kind() != SystemKind::Composite)
    throw SystemMismatch("embed_on_factor target is not a composite");
  const auto& factor =
      which == Side::Left ? composite->left() : composite->right();
  const auto& other =
      which == Side::Left ? composite->right() : composite->left();
  if (!same_system(t.input, factor))
    throw SystemMismatch("transformation does not act on the named factor");
  const Eigen::MatrixXd id =
      Eigen::MatrixXd::Identity(other->dim(), other->dim());
  if (which == Side::Left) {
    return Transformation{composite, compose(t.output, other),
                          kron(t.matrix, id), t.behaviour};
  }
  return Transformation{composite, compose(other, t.output),
                        kron(id, t.matrix), t.behaviour};
}

}  // namespace gptm
