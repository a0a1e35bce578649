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
#include "gptm/compose.hpp"
#include "gptm/config.hpp"
#include "gptm/quantum.hpp"

using namespace gptm;

TEST_SUITE("classical") {
  TEST_CASE("resolution of identity sums to the identity exactly") {
    for (int n : {1, 2, 5, 16, 64}) {
      const auto sys = make_classical(n);
      const Instrument roi = resolution_of_identity(sys);
      REQUIRE(static_cast<int>(roi.branches.size()) == n);
      const Eigen::MatrixXd sum = roi.branch_sum().matrix;
      // Each branch is an exact 0/1 matrix, so the sum is exact too: zero
      // tolerance is intentional.
      CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() ==
            0.0);
    }
  }

  TEST_CASE("each branch is the rank-one delta-effect sandwich") {
    const auto sys = make_classical(4);
    for (int x = 0; x < 4; ++x) {
      const Transformation b = roi_branch(sys, x);
      CHECK(b.behaviour == DiscardBehaviour::NonIncreasing);
      for (int y = 0; y < 4; ++y) {
        const State out = b.apply(delta_state(sys, y));
        CHECK(out.coeffs ==
              (x == y ? delta_state(sys, x).coeffs
                      : Eigen::VectorXd::Zero(4).eval()));
      }
    }
  }

  TEST_CASE("eager construction refuses past the cap but branches still work") {
    const int cap = limits().roi_eager_cap;
    const auto big = make_classical(cap + 1);
    CHECK_THROWS_AS(resolution_of_identity(big), Error);
    const Transformation b = roi_branch(big, cap);
    CHECK(b.matrix(cap, cap) == 1.0);
  }

  TEST_CASE("only simplex systems resolve the identity") {
    CHECK_THROWS_AS(resolution_of_identity(make_quantum(2)), NotClassical);
    CHECK_THROWS_AS(roi_branch(make_quantum(2), 0), NotClassical);
    // composites of classical systems are still simplex
    const auto cc = compose(make_classical(2), make_classical(3));
    const Instrument roi = resolution_of_identity(cc);
    CHECK(roi.branches.size() == 6);
    CHECK(roi.branch_sum().matrix == Eigen::MatrixXd::Identity(6, 6));
  }

  TEST_CASE("index bounds") {
    const auto sys = make_classical(3);
    CHECK_THROWS_AS(delta_state(sys, 3), IndexOutOfRange);
    CHECK_THROWS_AS(delta_state(sys, -1), IndexOutOfRange);
    CHECK_THROWS_AS(atomic_effect(sys, 5), IndexOutOfRange);
    CHECK_THROWS_AS(roi_branch(sys, 3), IndexOutOfRange);
  }
}
