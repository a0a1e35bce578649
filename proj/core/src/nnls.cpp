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

#include "gptm/nnls.hpp"

#include <Eigen/QR>
#include <limits>
#include <vector>

namespace gptm {

namespace {

// Least squares restricted to the passive column set.
Eigen::VectorXd solve_passive(const Eigen::MatrixXd& a,
                              const Eigen::VectorXd& b,
                              const std::vector<int>& passive) {
  Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t i = 0; i < passive.size(); ++i)
    ap.col(static_cast<Eigen::Index>(i)) = a.col(passive[i]);
  return ap.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                int max_iter) {
  const auto n = a.cols();
  if (max_iter <= 0) max_iter = static_cast<int>(3 * n) + 30;

  NnlsResult result;
  result.x = Eigen::VectorXd::Zero(n);

  const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
  const double tol_w = 1e-11 * scale * std::max<double>(1.0, a.rows());

  std::vector<bool> in_passive(n, false);
  std::vector<int> passive;

  Eigen::VectorXd w(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::VectorXd resid = b - a * result.x;
    w = a.transpose() * resid;

    // KKT: all inactive gradients nonpositive.
    int best = -1;
    double best_w = tol_w;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!in_passive[i] && w(i) > best_w) {
        best_w = w(i);
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      result.converged = true;
      break;
    }
    in_passive[best] = true;
    passive.push_back(best);

    Eigen::VectorXd z = solve_passive(a, b, passive);
    // Inner loop: walk back towards feasibility, dropping columns pinned
    // at zero.
    while ((z.array() <= 0.0).any()) {
      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < passive.size(); ++i) {
        if (z(static_cast<Eigen::Index>(i)) <= 0.0) {
          const double xi = result.x(passive[i]);
          const double denom = xi - z(static_cast<Eigen::Index>(i));
          if (denom > 0.0) alpha = std::min(alpha, xi / denom);
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (std::size_t i = 0; i < passive.size(); ++i) {
        const double xi = result.x(passive[i]);
        result.x(passive[i]) =
            xi + alpha * (z(static_cast<Eigen::Index>(i)) - xi);
      }
      std::vector<int> next;
      for (int col : passive) {
        if (result.x(col) > 1e-14) {
          next.push_back(col);
        } else {
          result.x(col) = 0.0;
          in_passive[col] = false;
        }
      }
      passive = std::move(next);
      if (passive.empty()) break;
      z = solve_passive(a, b, passive);
    }
    for (std::size_t i = 0; i < passive.size(); ++i)
      result.x(passive[i]) = z(static_cast<Eigen::Index>(i));
  }

  result.residual = a * result.x - b;
  result.residual_norm = result.residual.norm();
  return result;
}

}  // namespace gptm
