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

namespace gptm {

/// Lawson-Hanson active-set solver for min ||A x - b||_2 s.t. x >= 0.
/// Cone-membership feasibility reduces to this: b is in cone(A columns) iff
/// the optimal residual vanishes, and a nonzero optimal residual r satisfies
/// A^T r >= 0, which makes -r a separating functional (the witness).
struct NnlsResult {
  Eigen::VectorXd x;
  Eigen::VectorXd residual;  // A x - b
  double residual_norm = 0.0;
  bool converged = false;
};

NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                int max_iter = 0 /* 0 -> 3 * cols */);

}  // namespace gptm
