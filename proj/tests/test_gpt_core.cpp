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

#include <doctest.h>

#include "gptm/classical.hpp"
#include "gptm/rng.hpp"
#include "gptm/system.hpp"
#include "gptm/validate.hpp"

using namespace gptm;

TEST_SUITE("core") {
  TEST_CASE("classical system shape and pairing") {
    const auto sys = System::classical(3);
    CHECK(sys->dim() == 3);
    CHECK(sys->is_simplex());
    CHECK_FALSE(sys->is_quantum_like());
    CHECK(sys->sample_space_size() == 3);
    CHECK(sys->unit_effect_coeffs() == Eigen::VectorXd::Ones(3));

    // <epsilon_x, delta_y> = [x == y]
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        CHECK(evaluate(atomic_effect(sys, x), delta_state(sys, y)) ==
              (x == y ? 1.0 : 0.0));

    // unit effect evaluates to 1 on every delta
    for (int y = 0; y < 3; ++y)
      CHECK(evaluate(unit_effect(sys), delta_state(sys, y)) == 1.0);
    CHECK(evaluate(zero_effect(sys), delta_state(sys, 0)) == 0.0);
  }

  TEST_CASE("invalid classical sizes are rejected") {
    CHECK_THROWS_AS(System::classical(0), InvalidDimension);
    CHECK_THROWS_AS(System::classical(-2), InvalidDimension);
  }

  TEST_CASE("cone violation on the simplex") {
    const auto sys = System::classical(2);
    Eigen::VectorXd inside(2), outside(2);
    inside << 0.3, 0.7;
    outside << 1.2, -0.2;
    CHECK(cone_violation(sys, inside) == 0.0);
    CHECK(cone_violation(sys, outside) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(cone_contains(sys, inside, 1e-9));
    CHECK_FALSE(cone_contains(sys, outside, 1e-9));
  }

  TEST_CASE("custom system from explicit generators") {
    // A square state space (two bits worth of vertices in 2D coordinates).
    std::vector<Eigen::VectorXd> states;
    for (double x : {0.0, 1.0})
      for (double y : {0.0, 1.0}) {
        Eigen::VectorXd v(3);
        v << 1.0, x, y;
        states.push_back(v);
      }
    Eigen::VectorXd unit(3);
    unit << 1.0, 0.0, 0.0;
    const auto sys = System::custom(states, {unit}, unit);
    CHECK(sys->kind() == SystemKind::Custom);
    CHECK(sys->dim() == 3);
    const auto report = validate_system(sys);
    CHECK(report.pass);
    // Center of the square is in the cone; a point far outside is not.
    Eigen::VectorXd center(3), outside(3);
    center << 1.0, 0.5, 0.5;
    outside << 1.0, 3.0, 0.5;
    CHECK(cone_violation(sys, center) <= 1e-9);
    CHECK(cone_violation(sys, outside) > 1e-3);
  }

  TEST_CASE("transformation application and instrument branch sum") {
    const auto sys = System::classical(2);
    Eigen::MatrixXd flip(2, 2);
    flip << 0, 1, 1, 0;
    const Transformation t{sys, sys, flip, DiscardBehaviour::Preserving};
    const State moved = t.apply(delta_state(sys, 0));
    CHECK(moved.coeffs == delta_state(sys, 1).coeffs);

    const Instrument roi = resolution_of_identity(sys);
    const Transformation sum = roi.branch_sum();
    CHECK(sum.matrix == Eigen::MatrixXd::Identity(2, 2));
    CHECK(validate_instrument(roi).pass);
  }

  TEST_CASE("state validation flags bad norms and cone exits") {
    const auto sys = System::classical(2);
    CHECK(validate_state(delta_state(sys, 0)).pass);
    Eigen::VectorXd neg(2), heavy(2);
    neg << -0.5, 0.5;
    heavy << 1.0, 0.7;
    CHECK_FALSE(validate_state(State{sys, neg}).pass);
    CHECK_FALSE(validate_state(State{sys, heavy}).pass);
  }

  TEST_CASE("rng matches the published splitmix64 recurrence") {
    // Frozen from an independent big-integer implementation of the
    // Steele-Lea-Flood recurrence.
    SplitMix64 rng(42);
    CHECK(rng.next() == 0xBDD732262FEB6E95ULL);
    CHECK(rng.next() == 0x28EFE333B266F103ULL);
    CHECK(rng.next() == 0x47526757130F9F52ULL);
    CHECK(SplitMix64::derive(7, 3) == 0x212530C85317FE78ULL);
  }

  TEST_CASE("rng streams are reproducible and bounded") {
    SplitMix64 a(123), b(123);
    for (int i = 0; i < 100; ++i) {
      const double u = a.uniform();
      CHECK(u == b.uniform());
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
    // normal() caches its spare deterministically
    SplitMix64 c(9), d(9);
    for (int i = 0; i < 7; ++i) CHECK(c.normal() == d.normal());
  }
}
