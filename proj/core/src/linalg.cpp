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

#include "gptm/linalg.hpp"

namespace gptm {

Eigen::MatrixXd commutation_matrix(int m, int n) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) k(j * m + i, i * n + j) = 1.0;
  return k;
}

}  // namespace gptm
