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

/// Simplex system on sample space {0, ..., n-1}.
SystemPtr make_classical(int n);

State delta_state(const SystemPtr& sys, int x);
Effect atomic_effect(const SystemPtr& sys, int x);

/// Branch x of the identity resolution: the rank-1 map delta_x . epsilon_x.
/// Defined for any simplex system (including composites of classicals);
/// throws NotClassical otherwise.
Transformation roi_branch(const SystemPtr& sys, int x);

/// The full resolution of the identity as an eager Instrument: n rank-1
/// non-increasing branches whose sum is exactly the identity matrix.
/// For n above Limits::roi_eager_cap use roi_branch instead.
Instrument resolution_of_identity(const SystemPtr& sys);

}  // namespace gptm
