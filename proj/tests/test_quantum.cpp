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
#include <complex>

#include "gptm/compose.hpp"
#include "gptm/quantum.hpp"
#include "gptm/validate.hpp"

using namespace gptm;
using namespace std::complex_literals;

namespace {
Eigen::Vector4cd bell_phi_plus() {
  Eigen::Vector4cd v;
  v << 1, 0, 0, 1;
  return v / std::sqrt(2.0);
}
}  // namespace

TEST_SUITE("quantum") {
  TEST_CASE("hermitian basis is orthonormal, identity-first, traceless") {
    for (int d : {2, 3, 4}) {
      const HermitianBasis basis(d);
      REQUIRE(basis.size() == d * d);
      CHECK((basis.element(0) -
             Eigen::MatrixXcd::Identity(d, d) / std::sqrt(double(d)))
                .cwiseAbs()
                .maxCoeff() < 1e-14);
      for (int i = 0; i < basis.size(); ++i) {
        CHECK((basis.element(i) - basis.element(i).adjoint())
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
        if (i > 0) CHECK(std::abs(basis.element(i).trace()) < 1e-14);
        for (int j = 0; j < basis.size(); ++j) {
          const std::complex<double> ip =
              (basis.element(i).adjoint() * basis.element(j)).trace();
          CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-13);
        }
      }
    }
  }

  TEST_CASE("known chart values for |0><0| on a qubit") {
    // Basis order: B_0 = I/sqrt(2), B_1 = diag(1,-1)/sqrt(2), then the two
    // off-diagonal elements. Tr(|0><0| B_0) = Tr(|0><0| B_1) = 1/sqrt(2).
    const auto q = make_quantum(2);
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    rho(0, 0) = 1.0;
    const State s = density_to_state(q, rho);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(s.coeffs(0) == doctest::Approx(r).epsilon(1e-14));
    CHECK(s.coeffs(1) == doctest::Approx(r).epsilon(1e-14));
    CHECK(std::abs(s.coeffs(2)) < 1e-14);
    CHECK(std::abs(s.coeffs(3)) < 1e-14);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("density/state chart round trips") {
    SplitMix64 rng(5);
    for (int d : {2, 3}) {
      const auto q = make_quantum(d);
      for (int k = 0; k < 5; ++k) {
        const Eigen::MatrixXcd rho = random_density(d, rng);
        const State s = density_to_state(q, rho);
        CHECK((state_to_density(s) - rho).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  TEST_CASE("state_to_density rejects non-positive charts") {
    const auto q = make_quantum(2);
    Eigen::VectorXd coeffs(4);
    coeffs << 1.0 / std::sqrt(2.0), 2.0, 0.0, 0.0;  // Bloch vector length 2
    CHECK_THROWS_AS(state_to_density(State{q, coeffs}), NotPositive);
  }

  TEST_CASE("bell state negativity is one half") {
    // Eigen-oracle: the partial transpose of |Phi+><Phi+| has eigenvalues
    // {1/2, 1/2, 1/2, -1/2}.
    const auto v = bell_phi_plus();
    const Eigen::MatrixXcd rho = v * v.adjoint();
    CHECK(negativity(rho, 2, 2) == doctest::Approx(0.5).epsilon(1e-12));
    const auto qq = compose(make_quantum(2), make_quantum(2));
    CHECK(negativity(density_to_state(qq, rho)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // Product states have none.
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Zero(4, 4);
    prod(0, 0) = 1.0;
    CHECK(negativity(prod, 2, 2) == doctest::Approx(0.0));
  }

  TEST_CASE("werner state negativity crosses zero at p = 1/3") {
    const auto v = bell_phi_plus();
    auto werner = [&](double p) {
      return (p * (v * v.adjoint()) +
              (1.0 - p) * Eigen::MatrixXcd::Identity(4, 4) / 4.0)
          .eval();
    };
    // Frozen oracle: negativity = (3p - 1)/4 for p > 1/3.
    CHECK(negativity(werner(0.5), 2, 2) ==
          doctest::Approx(0.125).epsilon(1e-12));
    CHECK(negativity(werner(1.0), 2, 2) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(negativity(werner(0.2), 2, 2) == doctest::Approx(0.0));
  }

  TEST_CASE("kraus and choi charts agree for the dephasing channel") {
    const auto q = make_quantum(2);
    Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Identity() * std::sqrt(0.75);
    Eigen::Matrix2cd k1;
    k1 << std::sqrt(0.25), 0, 0, -std::sqrt(0.25);
    const Transformation t = kraus_to_transformation(q, q, {k0, k1});
    CHECK(t.behaviour == DiscardBehaviour::Preserving);
    const Eigen::MatrixXcd choi = transformation_to_choi(t);
    const Transformation back = choi_to_transformation(q, q, choi);
    CHECK((t.matrix - back.matrix).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(validate_transformation(t).pass);
  }

  TEST_CASE("the transpose map is positive but not completely positive") {
    // Choi eigen-oracle: the transpose Choi matrix at d = 2 is the swap with
    // eigenvalues {1, 1, 1, -1}, so the constructor must refuse it.
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    const auto q = make_quantum(2);
    CHECK_THROWS_AS(choi_to_transformation(q, q, swap), NotCP);
  }

  TEST_CASE("partial trace undoes a product") {
    SplitMix64 rng(11);
    const auto q = make_quantum(2);
    const Eigen::MatrixXcd ra = random_density(2, rng);
    const Eigen::MatrixXcd rb = random_density(2, rng);
    const State s = product_state(density_to_state(q, ra),
                                  density_to_state(q, rb));
    CHECK((state_to_density(partial_trace(s, 0)) - ra).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((state_to_density(partial_trace(s, 1)) - rb).cwiseAbs().maxCoeff() <
          1e-12);
  }

  TEST_CASE("haar sampling produces unitaries and normalized states") {
    SplitMix64 rng(3);
    for (int d : {2, 3}) {
      const Eigen::MatrixXcd u = haar_random_unitary(d, rng);
      CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
      CHECK(std::abs(haar_random_pure(d, rng).norm() - 1.0) < 1e-12);
      const Eigen::MatrixXcd rho = random_density(d, rng);
      CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
      CHECK(es.eigenvalues().minCoeff() > -1e-12);
    }
  }

  TEST_CASE("quantum systems validate and reject bad dimensions") {
    const auto q = make_quantum(2);
    CHECK(validate_system(q).pass);
    CHECK(q->hilbert_dim() == 2);
    CHECK(q->dim() == 4);
    CHECK_THROWS_AS(make_quantum(1), InvalidDimension);
    CHECK_THROWS_AS(q->sample_space_size(), NotClassical);
  }
}
