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
#include "gptm/linalg.hpp"
#include "gptm/quantum.hpp"

using namespace gptm;

TEST_SUITE("composition") {
  TEST_CASE("pairing factorizes on products") {
    const auto a = make_classical(2);
    const auto b = make_classical(3);
    const State sa = delta_state(a, 1);
    Eigen::VectorXd pb(3);
    pb << 0.2, 0.5, 0.3;
    const State sb{b, pb};
    const Effect ea = atomic_effect(a, 1);
    const Effect eb = atomic_effect(b, 2);
    CHECK(evaluate(product_effect(ea, eb), product_state(sa, sb)) ==
          doctest::Approx(evaluate(ea, sa) * evaluate(eb, sb)).epsilon(1e-15));
  }

  TEST_CASE("composite structure flags") {
    const auto cc = compose(make_classical(2), make_classical(2));
    CHECK(cc->is_simplex());
    CHECK(cc->sample_space_size() == 4);
    const auto qq = compose(make_quantum(2), make_quantum(3));
    CHECK(qq->is_quantum_like());
    CHECK(qq->hilbert_dim() == 6);
    CHECK(qq->dim() == 36);
    const auto qc = compose(make_quantum(2), make_classical(2));
    CHECK_FALSE(qc->is_simplex());
    CHECK_FALSE(qc->is_quantum_like());
    CHECK(qc->unit_effect_coeffs() ==
          kron_vec(make_quantum(2)->unit_effect_coeffs(),
                   make_classical(2)->unit_effect_coeffs()));
  }

  TEST_CASE("same_system is structural") {
    CHECK(same_system(make_classical(2), make_classical(2)));
    CHECK_FALSE(same_system(make_classical(2), make_classical(3)));
    CHECK_FALSE(same_system(make_classical(4), make_quantum(2)));
    CHECK(same_system(compose(make_quantum(2), make_classical(2)),
                      compose(make_quantum(2), make_classical(2))));
    CHECK_FALSE(same_system(compose(make_quantum(2), make_classical(2)),
                            compose(make_classical(2), make_quantum(2))));
  }

  TEST_CASE("product maps act factorwise") {
    const auto c2 = make_classical(2);
    Eigen::MatrixXd flip(2, 2);
    flip << 0, 1, 1, 0;
    const Transformation f{c2, c2, flip, DiscardBehaviour::Preserving};
    const Transformation id{c2, c2, Eigen::MatrixXd::Identity(2, 2),
                            DiscardBehaviour::Preserving};
    const Transformation fi = product_map(f, id);
    CHECK(fi.behaviour == DiscardBehaviour::Preserving);
    const State in = product_state(delta_state(c2, 0), delta_state(c2, 1));
    const State out = fi.apply(in);
    CHECK(out.coeffs ==
          product_state(delta_state(c2, 1), delta_state(c2, 1)).coeffs);
  }

  TEST_CASE("embedding a factor map leaves the other wire alone") {
    const auto c2 = make_classical(2);
    const auto cc = compose(c2, c2);
    Eigen::MatrixXd flip(2, 2);
    flip << 0, 1, 1, 0;
    const Transformation f{c2, c2, flip, DiscardBehaviour::Preserving};
    const Transformation on_left = embed_on_factor(f, Side::Left, cc);
    const Transformation on_right = embed_on_factor(f, Side::Right, cc);
    const State in = product_state(delta_state(c2, 0), delta_state(c2, 0));
    CHECK(on_left.apply(in).coeffs ==
          product_state(delta_state(c2, 1), delta_state(c2, 0)).coeffs);
    CHECK(on_right.apply(in).coeffs ==
          product_state(delta_state(c2, 0), delta_state(c2, 1)).coeffs);
    CHECK_THROWS_AS(
        embed_on_factor(f, Side::Left, compose(make_classical(3), c2)),
        SystemMismatch);
  }

  TEST_CASE("commutation matrix swaps kronecker factors") {
    SplitMix64 rng(17);
    Eigen::VectorXd u(3), v(4);
    for (int i = 0; i < 3; ++i) u(i) = rng.normal();
    for (int i = 0; i < 4; ++i) v(i) = rng.normal();
    const Eigen::MatrixXd k = commutation_matrix(3, 4);
    CHECK((k * kron_vec(u, v) - kron_vec(v, u)).cwiseAbs().maxCoeff() <
          1e-14);
    // K(m,n) . K(n,m) = identity
    CHECK((commutation_matrix(4, 3) * k -
           Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("composite quantum chart matches the joint density chart") {
    SplitMix64 rng(23);
    const auto q2 = make_quantum(2);
    const auto qq = compose(q2, q2);
    const Eigen::MatrixXcd ra = random_density(2, rng);
    const Eigen::MatrixXcd rb = random_density(2, rng);
    // kron of factor coordinates equals the chart of the kron density
    const State via_product = product_state(density_to_state(q2, ra),
                                            density_to_state(q2, rb));
    const State via_joint = density_to_state(qq, kron(ra, rb));
    CHECK((via_product.coeffs - via_joint.coeffs).cwiseAbs().maxCoeff() <
          1e-13);
  }
}
