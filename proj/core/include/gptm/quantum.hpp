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

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gptm/rng.hpp"
#include "gptm/system.hpp"

namespace gptm {

/// Orthonormal Hermitian basis of d x d operators under the trace inner
/// product, element 0 = I/sqrt(d), the rest traceless (generalized Gell-Mann
/// matrices, normalized). This fixes the coordinate chart of Quantum(d).
class HermitianBasis {
 public:
  explicit HermitianBasis(int d);

  int hilbert_dim() const { return d_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Eigen::MatrixXcd& element(int i) const { return elements_[i]; }
  const std::vector<Eigen::MatrixXcd>& elements() const { return elements_; }

 private:
  int d_;
  std::vector<Eigen::MatrixXcd> elements_;
};

/// Coordinate basis of a quantum-like system: Gell-Mann for Quantum(d),
/// Kronecker products of factor bases for composites (left factor slowest).
std::vector<Eigen::MatrixXcd> hermitian_basis_for(const SystemPtr& sys);

SystemPtr make_quantum(int d);

/// c_i = Tr(rho B_i). Accepts sub-normalized density matrices.
State density_to_state(const SystemPtr& sys, const Eigen::MatrixXcd& rho);

/// Inverse chart. Throws NotPositive when the reconstructed operator has an
/// eigenvalue below -cone tolerance.
Eigen::MatrixXcd state_to_density(const State& s);

/// Raw inverse chart without the positivity check (also used on effect
/// coefficients and arbitrary dual vectors).
Eigen::MatrixXcd coeffs_to_operator(const SystemPtr& sys,
                                    const Eigen::VectorXd& coeffs);

/// Same chart for operators: effect coefficients of a POVM element E.
Effect operator_to_effect(const SystemPtr& sys, const Eigen::MatrixXcd& op);
Eigen::MatrixXcd effect_to_operator(const Effect& e);

/// Channel in coordinates from Kraus operators: M_ab = Tr(B_a sum_k K B_b K+).
/// The discard behaviour is read off the Choi partial trace.
Transformation kraus_to_transformation(const SystemPtr& in, const SystemPtr& out,
                                       const std::vector<Eigen::MatrixXcd>& kraus);

/// Choi convention: C = sum_ij |i><j| (x) Phi(|i><j|), so Tr C = d_in for a
/// trace-preserving map and CP iff C >= 0. Throws NotCP below -cone tol.
Transformation choi_to_transformation(const SystemPtr& in, const SystemPtr& out,
                                      const Eigen::MatrixXcd& choi);
Eigen::MatrixXcd transformation_to_choi(const Transformation& t);

/// Reduced state of one factor of a quantum (x) quantum composite.
/// keep = 0 for the left factor, 1 for the right.
State partial_trace(const State& s, int keep);
Eigen::MatrixXcd partial_trace_matrix(const Eigen::MatrixXcd& rho, int d_left,
                                      int d_right, int keep);

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int d_left,
                                   int d_right);

/// (||rho^{T_B}||_1 - Tr rho)/2, computed as the negative eigenvalue mass of
/// the (Hermitian) partial transpose. Zero iff PPT; for 2x2 and 2x3 zero iff
/// separable (Peres-Horodecki).
double negativity(const Eigen::MatrixXcd& rho, int d_left, int d_right);
double negativity(const State& s);

Eigen::MatrixXcd haar_random_unitary(int d, SplitMix64& rng);
Eigen::VectorXcd haar_random_pure(int d, SplitMix64& rng);
Eigen::MatrixXcd random_density(int d, SplitMix64& rng);

}  // namespace gptm
