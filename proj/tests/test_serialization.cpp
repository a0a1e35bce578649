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
#include "gptm/quantum.hpp"
#include "gptm/scenarios.hpp"
#include "gptm/separability.hpp"
#include "gptm/serialize.hpp"
#include "gptm/signalling.hpp"
#include "gptm/validate.hpp"

using namespace gptm;

TEST_SUITE("serialization") {
  TEST_CASE("system round trips for every kind") {
    const auto systems = {
        make_classical(3),
        make_quantum(2),
        compose(make_quantum(2), make_classical(4)),
        compose(compose(make_classical(2), make_classical(2)),
                make_quantum(3)),
    };
    for (const auto& sys : systems) {
      const auto back = system_from_json(system_to_json(sys));
      CHECK(same_system(sys, back));
      CHECK(back->dim() == sys->dim());
    }
  }

  TEST_CASE("states, effects and transformations survive round trips") {
    SplitMix64 rng(31);
    const auto q = make_quantum(2);
    const State s = density_to_state(q, random_density(2, rng));
    const State s2 = state_from_json(state_to_json(s));
    CHECK(s2.coeffs == s.coeffs);
    CHECK(same_system(s2.system, q));

    const Effect e = unit_effect(q);
    CHECK(effect_from_json(effect_to_json(e)).coeffs == e.coeffs);

    const Transformation t = collapse_channel(0.4);
    const Transformation t2 = transformation_from_json(transformation_to_json(t));
    CHECK(t2.matrix == t.matrix);
    CHECK(t2.behaviour == t.behaviour);
  }

  TEST_CASE("doubles round trip bit-exactly") {
    // Values with no short decimal form must survive dump + parse unchanged.
    Eigen::VectorXd v(3);
    v << 0.1, 1.0 / 3.0, 6.62607015e-34;
    const auto q = make_classical(3);
    const State s{q, v};
    const json j = json::parse(dump_canonical(state_to_json(s)));
    const State back = state_from_json(j);
    CHECK(back.coeffs(0) == v(0));
    CHECK(back.coeffs(1) == v(1));
    CHECK(back.coeffs(2) == v(2));
  }

  TEST_CASE("canonical dumps are stable") {
    NoGoConfig cfg;
    cfg.seed = 15;
    const NoGoTrial t = make_no_go_trial(cfg, 2);
    const std::string once = dump_canonical(circuit_to_json(t.circuit));
    const std::string twice = dump_canonical(circuit_to_json(t.circuit));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
  }

  TEST_CASE("circuits replay identically after a round trip") {
    NoGoConfig cfg;
    cfg.seed = 23;
    cfg.g_size = 3;
    const NoGoTrial t = make_no_go_trial(cfg, 1);
    const MediatedCircuit back =
        circuit_from_json(json::parse(dump_canonical(circuit_to_json(t.circuit))));
    const State o1 = apply_circuit(t.circuit, t.input);
    const State o2 = apply_circuit(back, t.input);
    CHECK(o1.coeffs == o2.coeffs);
  }

  TEST_CASE("malformed payloads raise errors") {
    CHECK_THROWS_AS(system_from_json(json{{"kind", "hyperbolic"}}), Error);
    json bad_state{{"system", {{"kind", "classical"}, {"size", 2}}},
                   {"coeffs", {1.0, 0.0, 0.0}}};
    CHECK_THROWS_AS(state_from_json(bad_state), Error);
    json bad_matrix{{"rows", 2}, {"cols", 2}, {"data", {1.0}}};
    json bad_t{{"input", {{"kind", "classical"}, {"size", 2}}},
               {"output", {{"kind", "classical"}, {"size", 2}}},
               {"matrix", bad_matrix},
               {"behaviour", "preserving"}};
    CHECK_THROWS_AS(transformation_from_json(bad_t), Error);
  }

  TEST_CASE("report serializers expose the contract fields") {
    const json cert = certificate_to_json(SeparabilityCertificate{});
    CHECK(cert.contains("verdict"));
    CHECK(cert.contains("decomposition"));
    CHECK(cert.contains("witness"));
    CHECK(cert.contains("negativity"));

    ValidationReport vr;
    vr.add("probe", 0.0, 1e-9);
    const json v = validation_report_to_json(vr);
    CHECK(v["pass"] == true);
    CHECK(v["checks"][0]["name"] == "probe");

    NoGoConfig cfg;
    cfg.trials = 2;
    cfg.seed = 1;
    const json n = no_go_report_to_json(verify_no_go(cfg));
    CHECK(n["pass"] == true);
    CHECK(n["config"]["seed"] == 1);
    CHECK(n.contains("worst_case"));

    const json p =
        condition_profile_to_json(classify_model(Model::NonMediated));
    CHECK(p["generates_entanglement"] == true);
    CHECK(p["interaction_mediated"] == false);

    const json sig = signalling_report_to_json(assess_superluminality({}));
    CHECK(sig["superluminal"] == true);
    CHECK(sig.contains("trace_distance_alice"));
  }
}
