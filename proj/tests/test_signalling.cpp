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

#include <cmath>

#include "gptm/quantum.hpp"
#include "gptm/signalling.hpp"

using namespace gptm;

TEST_SUITE("signalling") {
  TEST_CASE("keeping the trap preserves full interference") {
    const ProtocolState s = run_protocol({}, /*bob_releases=*/false);
    CHECK(s.branch_overlap == 1.0);
    CHECK(s.visibility == 1.0);
    CHECK(std::abs(s.density.trace().real() - 1.0) < 1e-14);
  }

  TEST_CASE("ideal release drives the branches orthogonal") {
    // Default parameters accrue a phase gap far beyond pi within t_b.
    const ProtocolState s = run_protocol({}, /*bob_releases=*/true);
    CHECK(std::abs(s.branch_overlap) < 1e-12);
    CHECK(s.visibility < 1e-12);
    // The joint state is then maximally entangled between the branches.
    CHECK(negativity(s.density, 2, 2) == doctest::Approx(0.5).epsilon(1e-10));
  }

  TEST_CASE("alice trace distance hits the derived one-half oracle") {
    // Oracle: eigenvalues of |+><+| - I/2 are +-1/2, so the trace distance
    // between Alice's kept and released reduced states is 1/2.
    const SignallingReport r = assess_superluminality({});
    CHECK(r.visibility_no_release == 1.0);
    CHECK(r.visibility_release < 1e-12);
    CHECK(r.trace_distance_alice == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("frozen phase gap and light-crossing numbers for the defaults") {
    const SignallingReport r = assess_superluminality({});
    CHECK(r.entangling_phase ==
          doctest::Approx(31664387.073993649).epsilon(1e-12));
    CHECK(r.light_crossing_time ==
          doctest::Approx(3.3356409519815204e-9).epsilon(1e-12));
    CHECK(r.entangling_time_ok);
    CHECK(r.superluminal);
  }

  TEST_CASE("slow protocols cannot beat light") {
    ProtocolParams slow;
    slow.t_a = 1.0;
    const SignallingReport r = assess_superluminality(slow);
    CHECK_FALSE(r.superluminal);
  }

  TEST_CASE("weak release only dents the visibility") {
    ProtocolParams weak;
    weak.m_b = 1e-18;  // tiny probe: phase gap << pi
    const SignallingReport r = assess_superluminality(weak);
    CHECK(r.visibility_release > 0.99);
    CHECK(r.trace_distance_alice < 0.25);
    CHECK_FALSE(r.entangling_time_ok);
    CHECK_FALSE(r.superluminal);
  }

  TEST_CASE("geometry guards and soft warnings") {
    ProtocolParams bad;
    bad.d = 3.0;  // branch distance L - d/2 < 0
    CHECK_THROWS_AS(run_protocol(bad, true), InvalidGeometry);

    ProtocolParams wide;
    wide.d = 0.5;  // not << L: expect a warning, not an error
    const ProtocolState s = run_protocol(wide, true);
    CHECK_FALSE(s.warnings.empty());
    CHECK(run_protocol({}, true).warnings.empty());
  }

  TEST_CASE("constants are overridable for unit-system checks") {
    PhysicalConstants geometrized;
    geometrized.newton_g = 1.0;
    geometrized.hbar = 1.0;
    geometrized.light_speed = 1.0;
    ProtocolParams p;
    p.m_a = 1.0;
    p.m_b = 1.0;
    p.d = 1.0;
    p.L = 1.0;
    p.t_b = 1.0;
    // gap = (1/(1 - 1/2) - 1/(1 + 1/2)) = 2 - 2/3 = 4/3
    const SignallingReport r = assess_superluminality(p, geometrized);
    CHECK(r.entangling_phase == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(r.light_crossing_time == doctest::Approx(1.0));
  }
}
