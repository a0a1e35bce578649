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

#include "gptm/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

#include "gptm/config.hpp"
#include "gptm/linalg.hpp"

namespace gptm {

using std::complex;
using cd = complex<double>;

HermitianBasis::HermitianBasis(int d) : d_(d) {
  if (d < 2) throw InvalidDimension("quantum system needs d >= 2");
  elements_.reserve(static_cast<std::size_t>(d) * d);
  // Identity-first so the trace functional is a single coordinate.
  elements_.push_back(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(double(d)));
  // Diagonal (traceless) elements.
  for (int l = 1; l < d; ++l) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
    for (int i = 0; i < l; ++i) m(i, i) = norm;
    m(l, l) = -double(l) * norm;
    elements_.push_back(std::move(m));
  }
  // Off-diagonal symmetric/antisymmetric pairs.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      elements_.push_back(std::move(sym));
      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(d, d);
      asym(j, k) = cd(0.0, -inv_sqrt2);
      asym(k, j) = cd(0.0, inv_sqrt2);
      elements_.push_back(std::move(asym));
    }
  }
}

std::vector<Eigen::MatrixXcd> hermitian_basis_for(const SystemPtr& sys) {
  if (sys->kind() == SystemKind::Quantum)
    return HermitianBasis(sys->param()).elements();
  if (sys->kind() == SystemKind::Composite && sys->is_quantum_like()) {
    const auto left = hermitian_basis_for(sys->left());
    const auto right = hermitian_basis_for(sys->right());
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(left.size() * right.size());
    for (const auto& l : left)
      for (const auto& r : right) out.push_back(kron(l, r));
    return out;
  }
  throw SystemMismatch("hermitian basis requested for non-quantum system");
}

SystemPtr System::quantum(int d) {
  if (d < 2) throw InvalidDimension("quantum system needs d >= 2");
  auto sys = std::shared_ptr<System>(new System());
  sys->kind_ = SystemKind::Quantum;
  sys->dim_ = d * d;
  sys->param_ = d;
  sys->unit_effect_ = Eigen::VectorXd::Zero(d * d);
  sys->unit_effect_(0) = std::sqrt(double(d));

  // Finite generating sample of pure states. The state space is not a
  // polytope, so this list is a validation-sampling heuristic; the exact
  // membership test is the PSD check in cone_violation. Seeded from d so
  // construction is deterministic.
  const HermitianBasis basis(d);
  SplitMix64 rng(SplitMix64::derive(0x517CC1B727220A95ULL, d));
  const int samples = limits().quantum_state_sample;
  sys->extreme_states_.reserve(samples);
  sys->extremal_effects_.reserve(samples + 2);
  sys->extremal_effects_.push_back(Eigen::VectorXd::Zero(d * d));
  sys->extremal_effects_.push_back(sys->unit_effect_);
  for (int i = 0; i < samples; ++i) {
    Eigen::VectorXcd psi = haar_random_pure(d, rng);
    Eigen::MatrixXcd proj = psi * psi.adjoint();
    Eigen::VectorXd coeffs(d * d);
    for (int a = 0; a < d * d; ++a)
      coeffs(a) = (basis.element(a).adjoint() * proj).trace().real();
    sys->extreme_states_.push_back(coeffs);
    // Rank-1 projectors are also extremal effects.
    sys->extremal_effects_.push_back(coeffs);
  }
  return sys;
}

SystemPtr make_quantum(int d) { return System::quantum(d); }

State density_to_state(const SystemPtr& sys, const Eigen::MatrixXcd& rho) {
  const auto basis = hermitian_basis_for(sys);
  const int hd = sys->hilbert_dim();
  if (rho.rows() != hd || rho.cols() != hd)
    throw SystemMismatch("density matrix dimension mismatch");
  Eigen::VectorXd coeffs(sys->dim());
  for (int a = 0; a < sys->dim(); ++a)
    coeffs(a) = (basis[a] * rho).trace().real();
  return State{sys, std::move(coeffs)};
}

Eigen::MatrixXcd coeffs_to_operator(const SystemPtr& sys,
                                    const Eigen::VectorXd& coeffs) {
  const auto basis = hermitian_basis_for(sys);
  const int hd = sys->hilbert_dim();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(hd, hd);
  for (int a = 0; a < sys->dim(); ++a) op += coeffs(a) * basis[a];
  return op;
}

Eigen::MatrixXcd state_to_density(const State& s) {
  Eigen::MatrixXcd rho = coeffs_to_operator(s.system, s.coeffs);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tolerances().cone)
    throw NotPositive("state vector is not in the quantum cone");
  return rho;
}

Effect operator_to_effect(const SystemPtr& sys, const Eigen::MatrixXcd& op) {
  const auto basis = hermitian_basis_for(sys);
  Eigen::VectorXd coeffs(sys->dim());
  for (int a = 0; a < sys->dim(); ++a)
    coeffs(a) = (basis[a] * op).trace().real();
  return Effect{sys, std::move(coeffs)};
}

Eigen::MatrixXcd effect_to_operator(const Effect& e) {
  return coeffs_to_operator(e.system, e.coeffs);
}

namespace {

DiscardBehaviour behaviour_from_kraus(
    const std::vector<Eigen::MatrixXcd>& kraus) {
  const auto d = kraus.front().cols();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double dev =
      (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  return dev <= tolerances().cone ? DiscardBehaviour::Preserving
                                  : DiscardBehaviour::NonIncreasing;
}

}  // namespace

Transformation kraus_to_transformation(
    const SystemPtr& in, const SystemPtr& out,
    const std::vector<Eigen::MatrixXcd>& kraus) {
  if (kraus.empty()) throw ArityMismatch("empty Kraus list");
  const auto basis_in = hermitian_basis_for(in);
  const auto basis_out = hermitian_basis_for(out);
  const int hd_out = out->hilbert_dim();
  for (const auto& k : kraus)
    if (k.rows() != hd_out || k.cols() != in->hilbert_dim())
      throw SystemMismatch("Kraus operator dimension mismatch");
  Eigen::MatrixXd m(out->dim(), in->dim());
  for (int b = 0; b < in->dim(); ++b) {
    Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(hd_out, hd_out);
    for (const auto& k : kraus) image += k * basis_in[b] * k.adjoint();
    for (int a = 0; a < out->dim(); ++a)
      m(a, b) = (basis_out[a] * image).trace().real();
  }
  return Transformation{in, out, std::move(m), behaviour_from_kraus(kraus)};
}

Transformation choi_to_transformation(const SystemPtr& in, const SystemPtr& out,
                                      const Eigen::MatrixXcd& choi) {
  const int din = in->hilbert_dim();
  const int dout = out->hilbert_dim();
  if (choi.rows() != din * dout || choi.cols() != din * dout)
    throw SystemMismatch("Choi matrix dimension mismatch");
  if ((choi - choi.adjoint()).cwiseAbs().maxCoeff() > tolerances().cone)
    throw NotCP("Choi matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(choi,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tolerances().cone)
    throw NotCP("Choi matrix has a negative eigenvalue");

  const auto basis_in = hermitian_basis_for(in);
  const auto basis_out = hermitian_basis_for(out);
  Eigen::MatrixXd m(out->dim(), in->dim());
  for (int b = 0; b < in->dim(); ++b) {
    // Phi(X) = Tr_1( C (X^T (x) I) ).
    const Eigen::MatrixXcd xt = basis_in[b].transpose();
    Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(dout, dout);
    for (int i = 0; i < din; ++i)
      for (int j = 0; j < din; ++j)
        image += xt(j, i) * choi.block(i * dout, j * dout, dout, dout);
    for (int a = 0; a < out->dim(); ++a)
      m(a, b) = (basis_out[a] * image).trace().real();
  }
  // Preserving iff the output-side partial trace of the Choi is the identity.
  Eigen::MatrixXcd ptr = Eigen::MatrixXcd::Zero(din, din);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      ptr(i, j) = choi.block(i * dout, j * dout, dout, dout).trace();
  const double dev =
      (ptr - Eigen::MatrixXcd::Identity(din, din)).cwiseAbs().maxCoeff();
  const auto behaviour = dev <= tolerances().cone
                             ? DiscardBehaviour::Preserving
                             : DiscardBehaviour::NonIncreasing;
  return Transformation{in, out, std::move(m), behaviour};
}

Eigen::MatrixXcd transformation_to_choi(const Transformation& t) {
  const int din = t.input->hilbert_dim();
  const int dout = t.output->hilbert_dim();
  const auto basis_in = hermitian_basis_for(t.input);
  const auto basis_out = hermitian_basis_for(t.output);
  // Phi(E_ij) expanded over input basis coefficients <B_b, E_ij> = (B_b)_ji.
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(dout, dout);
      for (int b = 0; b < t.input->dim(); ++b) {
        const cd weight = basis_in[b](j, i);
        if (weight == cd(0.0, 0.0)) continue;
        Eigen::MatrixXcd phi_b = Eigen::MatrixXcd::Zero(dout, dout);
        for (int a = 0; a < t.output->dim(); ++a)
          phi_b += t.matrix(a, b) * basis_out[a];
        image += weight * phi_b;
      }
      choi.block(i * dout, j * dout, dout, dout) = image;
    }
  }
  return choi;
}

Eigen::MatrixXcd partial_trace_matrix(const Eigen::MatrixXcd& rho, int d_left,
                                      int d_right, int keep) {
  if (rho.rows() != d_left * d_right)
    throw SystemMismatch("partial trace dimension mismatch");
  if (keep == 0) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_left, d_left);
    for (int i = 0; i < d_left; ++i)
      for (int k = 0; k < d_left; ++k)
        for (int j = 0; j < d_right; ++j)
          out(i, k) += rho(i * d_right + j, k * d_right + j);
    return out;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_right, d_right);
  for (int j = 0; j < d_right; ++j)
    for (int l = 0; l < d_right; ++l)
      for (int i = 0; i < d_left; ++i)
        out(j, l) += rho(i * d_right + j, i * d_right + l);
  return out;
}

State partial_trace(const State& s, int keep) {
  const auto& sys = s.system;
  if (sys->kind() != SystemKind::Composite || !sys->is_quantum_like())
    throw SystemMismatch("partial trace needs a quantum composite");
  const int dl = sys->left()->hilbert_dim();
  const int dr = sys->right()->hilbert_dim();
  const Eigen::MatrixXcd rho = coeffs_to_operator(sys, s.coeffs);
  const Eigen::MatrixXcd red = partial_trace_matrix(rho, dl, dr, keep);
  return density_to_state(keep == 0 ? sys->left() : sys->right(), red);
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int d_left,
                                   int d_right) {
  if (rho.rows() != d_left * d_right)
    throw SystemMismatch("partial transpose dimension mismatch");
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (int i = 0; i < d_left; ++i)
    for (int k = 0; k < d_left; ++k)
      out.block(i * d_right, k * d_right, d_right, d_right) =
          rho.block(i * d_right, k * d_right, d_right, d_right).transpose();
  return out;
}

double negativity(const Eigen::MatrixXcd& rho, int d_left, int d_right) {
  const Eigen::MatrixXcd pt = partial_transpose(rho, d_left, d_right);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
  double neg = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < 0.0) neg -= es.eigenvalues()(i);
  return neg;
}

double negativity(const State& s) {
  const auto& sys = s.system;
  if (sys->kind() != SystemKind::Composite || !sys->is_quantum_like())
    throw SystemMismatch("negativity needs a quantum composite state");
  const int dl = sys->left()->hilbert_dim();
  const int dr = sys->right()->hilbert_dim();
  return negativity(coeffs_to_operator(sys, s.coeffs), dl, dr);
}

Eigen::MatrixXcd haar_random_unitary(int d, SplitMix64& rng) {
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = cd(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const cd rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= (mag > 0.0) ? rii / mag : cd(1.0, 0.0);
  }
  return q;
}

Eigen::VectorXcd haar_random_pure(int d, SplitMix64& rng) {
  Eigen::VectorXcd psi(d);
  for (int i = 0; i < d; ++i) psi(i) = cd(rng.normal(), rng.normal());
  psi /= psi.norm();
  return psi;
}

Eigen::MatrixXcd random_density(int d, SplitMix64& rng) {
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = cd(rng.normal(), rng.normal());
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace gptm
