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

#include "gptm/classical.hpp"

#include "gptm/config.hpp"

namespace gptm {

SystemPtr make_classical(int n) { return System::classical(n); }

State delta_state(const SystemPtr& sys, int x) {
  const int n = sys->sample_space_size();
  if (x < 0 || x >= n) throw IndexOutOfRange("delta state index out of range");
  return State{sys, Eigen::VectorXd::Unit(n, x)};
}

Effect atomic_effect(const SystemPtr& sys, int x) {
  const int n = sys->sample_space_size();
  if (x < 0 || x >= n)
    throw IndexOutOfRange("atomic effect index out of range");
  return Effect{sys, Eigen::VectorXd::Unit(n, x)};
}

Transformation roi_branch(const SystemPtr& sys, int x) {
  const int n = sys->sample_space_size();  // throws NotClassical otherwise
  if (x < 0 || x >= n) throw IndexOutOfRange("branch index out of range");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(x, x) = 1.0;  // delta_x . epsilon_x
  return Transformation{sys, sys, std::move(m),
                        DiscardBehaviour::NonIncreasing};
}

Instrument resolution_of_identity(const SystemPtr& sys) {
  const int n = sys->sample_space_size();
  if (n > limits().roi_eager_cap)
    throw Error(
        "sample space exceeds the eager resolution-of-identity cap; "
        "use roi_branch(sys, x) instead");
  Instrument instr;
  instr.branches.reserve(n);
  for (int x = 0; x < n; ++x) instr.branches.push_back(roi_branch(sys, x));
  return instr;
}

}  // namespace gptm
