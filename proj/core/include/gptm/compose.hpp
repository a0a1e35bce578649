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

#include "gptm/system.hpp"

namespace gptm {

/// Tensor-product composite. The flattening convention is fixed globally:
/// the left factor index varies slowest. State spaces per kind:
///  - simplex (x) simplex: the simplex on the product sample space,
///  - quantum (x) quantum: the full quantum composite (PSD cone),
///  - classical (x) any: classically controlled mixtures sum_x p_x d_x (x) s_x
///    (minimal and maximal tensor products coincide here),
///  - custom (x) custom: the minimal tensor product (convex hull of
///    products) only.
SystemPtr compose(const SystemPtr& a, const SystemPtr& b);

State product_state(const State& a, const State& b);
Effect product_effect(const Effect& a, const Effect& b);
Transformation product_map(const Transformation& a, const Transformation& b);

enum class Side { Left, Right };

/// t (x) id or id (x) t on a composite whose named factor matches t.
Transformation embed_on_factor(const Transformation& t, Side which,
                               const SystemPtr& composite);

}  // namespace gptm
