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

#include "gptm/validate.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "gptm/config.hpp"
#include "gptm/quantum.hpp"

namespace gptm {

void ValidationReport::add(std::string name, double violation, double tol) {
  const bool ok = violation <= tol;
  checks.push_back({std::move(name), ok, violation});
  pass = pass && ok;
}

ValidationReport validate_system(const SystemPtr& sys) {
  ValidationReport report;
  const auto& tol = tolerances();
  const auto& unit = sys->unit_effect_coeffs();

  double unit_dev = 0.0;
  for (const auto& s : sys->extreme_states())
    unit_dev = std::max(unit_dev, std::abs(unit.dot(s) - 1.0));
  report.add("unit_effect_normalizes_extreme_states", unit_dev, tol.algebraic);

  double effect_dev = 0.0;
  for (const auto& e : sys->extremal_effects()) {
    for (const auto& s : sys->extreme_states()) {
      const double v = e.dot(s);
      effect_dev = std::max({effect_dev, -v, v - 1.0});
    }
  }
  report.add("extremal_effects_in_unit_interval", std::max(0.0, effect_dev),
             tol.cone);
  return report;
}

ValidationReport validate_state(const State& s) {
  ValidationReport report;
  const auto& tol = tolerances();
  report.add("cone_membership", cone_violation(s.system, s.coeffs), tol.cone);
  const double norm = s.norm();
  report.add("norm_at_most_one", std::max(0.0, norm - 1.0), tol.cone);
  report.add("norm_nonnegative", std::max(0.0, -norm), tol.cone);
  return report;
}

ValidationReport validate_effect(const Effect& e) {
  ValidationReport report;
  const auto& tol = tolerances();
  double dev = 0.0;
  for (const auto& s : e.system->extreme_states()) {
    const double v = e.coeffs.dot(s);
    dev = std::max({dev, -v, v - 1.0});
  }
  report.add("in_unit_interval_on_extreme_states", std::max(0.0, dev),
             tol.cone);
  if (e.system->is_quantum_like()) {
    // The sample above is a heuristic; the operator check is exact.
    const Eigen::MatrixXcd op = effect_to_operator(e);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op,
                                                       Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    report.add("operator_between_zero_and_identity",
               std::max({0.0, -lo, hi - 1.0}), tol.cone);
  }
  return report;
}

ValidationReport validate_transformation(const Transformation& t) {
  ValidationReport report;
  const auto& tol = tolerances();
  const auto& unit_in = t.input->unit_effect_coeffs();
  const auto& unit_out = t.output->unit_effect_coeffs();
  const Eigen::RowVectorXd pushed = unit_out.transpose() * t.matrix;

  if (t.behaviour == DiscardBehaviour::Preserving) {
    report.add("discard_preserving",
               (pushed.transpose() - unit_in).cwiseAbs().maxCoeff(), tol.cone);
  } else {
    double dev = 0.0;
    for (const auto& s : t.input->extreme_states())
      dev = std::max(dev, pushed.dot(s) - unit_in.dot(s));
    report.add("discard_nonincreasing", std::max(0.0, dev), tol.cone);
  }

  double cone_dev = 0.0;
  for (const auto& s : t.input->extreme_states())
    cone_dev = std::max(cone_dev, cone_violation(t.output, t.matrix * s));
  report.add("maps_extreme_states_into_state_cone", cone_dev, tol.cone);

  if (t.input->is_quantum_like() && t.output->is_quantum_like()) {
    const Eigen::MatrixXcd choi = transformation_to_choi(t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(choi,
                                                       Eigen::EigenvaluesOnly);
    report.add("completely_positive",
               std::max(0.0, -es.eigenvalues().minCoeff()), tol.cone);
  }
  return report;
}

ValidationReport validate_instrument(const Instrument& instr) {
  ValidationReport report;
  const auto& tol = tolerances();
  if (instr.branches.empty()) {
    report.add("has_branches", 1.0, 0.0);
    return report;
  }
  for (std::size_t i = 0; i < instr.branches.size(); ++i) {
    const auto& b = instr.branches[i];
    const double flag =
        b.behaviour == DiscardBehaviour::NonIncreasing ? 0.0 : 1.0;
    report.add("branch_" + std::to_string(i) + "_nonincreasing_flag", flag,
               0.0);
  }
  const Transformation sum = instr.branch_sum();
  const Eigen::RowVectorXd pushed =
      sum.output->unit_effect_coeffs().transpose() * sum.matrix;
  report.add(
      "branch_sum_discard_preserving",
      (pushed.transpose() - sum.input->unit_effect_coeffs()).cwiseAbs().maxCoeff(),
      tol.algebraic);
  return report;
}

}  // namespace gptm
