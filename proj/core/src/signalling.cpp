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

#include "gptm/signalling.hpp"

#include <algorithm>
#include <cmath>

#include "gptm/errors.hpp"

namespace gptm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Differential Newtonian phase between Alice's two branches accrued by Bob's
// released mass over his entangling time.
double branch_phase_gap(const ProtocolParams& p,
                        const PhysicalConstants& consts) {
  if (p.L <= 0.0 || p.d <= 0.0 || p.L - p.d / 2.0 <= 0.0)
    throw InvalidGeometry("need 0 < d/2 < L for positive branch distances");
  return consts.newton_g * p.m_a * p.m_b * p.t_b *
         (1.0 / (p.L - p.d / 2.0) - 1.0 / (p.L + p.d / 2.0)) / consts.hbar;
}

void geometry_warnings(const ProtocolParams& p,
                       std::vector<std::string>& warnings) {
  if (p.d >= 0.2 * p.L)
    warnings.push_back(
        "branch separation d is not small compared to L; the dipole phase "
        "formula is a leading-order approximation");
  if (p.m_b >= p.m_a)
    warnings.push_back(
        "probe mass m_b is not small compared to m_a; backaction on Alice's "
        "superposition is neglected");
}

}  // namespace

ProtocolState run_protocol(const ProtocolParams& p, bool bob_releases,
                           const PhysicalConstants& consts) {
  ProtocolState out;
  geometry_warnings(p, out.warnings);

  double overlap = 1.0;
  if (bob_releases) {
    // Pure-dephasing interpolation: the branch overlap <B_L|B_R> winds down
    // linearly in phase, saturating at orthogonality once the gap reaches pi.
    const double gap = branch_phase_gap(p, consts);
    overlap = std::cos(std::min(gap, kPi) / 2.0);
  }
  out.branch_overlap = overlap;
  out.visibility = std::abs(overlap);

  // Joint state (|L>|B_L> + |R>|B_R>)/sqrt(2) with real overlap c: embed
  // |B_L> = |0>, |B_R> = c|0> + sqrt(1-c^2)|1>.
  const double c = overlap;
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = 1.0 / std::sqrt(2.0);        // |L>|0>
  psi(2) = c / std::sqrt(2.0);          // |R>|0>
  psi(3) = s / std::sqrt(2.0);          // |R>|1>
  out.density = psi * psi.adjoint();
  return out;
}

SignallingReport assess_superluminality(const ProtocolParams& p,
                                        const PhysicalConstants& consts) {
  SignallingReport r;
  r.params = p;
  geometry_warnings(p, r.warnings);

  const ProtocolState kept = run_protocol(p, false, consts);
  const ProtocolState released = run_protocol(p, true, consts);
  r.visibility_no_release = kept.visibility;
  r.visibility_release = released.visibility;

  // Alice's reduced state is I/2 + overlap * offdiagonal/2; the trace
  // distance between "Bob kept" and "Bob released" is |1 - c| / 2.
  r.trace_distance_alice =
      std::abs(kept.branch_overlap - released.branch_overlap) / 2.0;

  r.light_crossing_time = p.L / consts.light_speed;
  r.entangling_phase = branch_phase_gap(p, consts);
  r.entangling_time_ok = r.entangling_phase >= kPi;
  r.superluminal = (p.t_a + p.t_b < r.light_crossing_time) &&
                   r.trace_distance_alice > r.distinguishability_threshold;
  if (r.superluminal)
    r.warnings.push_back(
        "protocol parameters allow Alice to read Bob's choice before light "
        "could connect them; a consistent model must break one of the "
        "assumptions that produced this state change");
  return r;
}

}  // namespace gptm
