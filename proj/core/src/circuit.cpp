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

#include "gptm/circuit.hpp"

#include <cmath>

#include "gptm/compose.hpp"
#include "gptm/config.hpp"
#include "gptm/linalg.hpp"

namespace gptm {

namespace {

void check_circuit(const MediatedCircuit& c) {
  if (!c.a || !c.b || !c.g) throw InvalidCircuit("circuit systems unset");
  if (!same_system(c.initial_field.system, c.g))
    throw InvalidCircuit("initial field is not a state of G");
  const int dag = c.a->dim() * c.g->dim();
  const int dbg = c.b->dim() * c.g->dim();
  for (const auto& round : c.rounds) {
    if (round.on_ag.matrix.rows() != dag || round.on_ag.matrix.cols() != dag)
      throw InvalidCircuit("round map on A(x)G has wrong dimensions");
    if (round.on_bg.matrix.rows() != dbg || round.on_bg.matrix.cols() != dbg)
      throw InvalidCircuit("round map on B(x)G has wrong dimensions");
    if (round.on_ag.behaviour != DiscardBehaviour::Preserving ||
        round.on_bg.behaviour != DiscardBehaviour::Preserving)
      throw InvalidCircuit("round maps must be discard-preserving");
  }
  if (c.final_field_effect &&
      !same_system(c.final_field_effect->system, c.g))
    throw InvalidCircuit("final field effect is not an effect of G");
}

// Induced matrix on the canonical tripartite layout A (x) G (x) B.
Eigen::MatrixXd tripartite_matrix(const MediatedCircuit& c) {
  const int da = c.a->dim();
  const int dg = c.g->dim();
  const int db = c.b->dim();
  const Eigen::MatrixXd id_a = Eigen::MatrixXd::Identity(da, da);
  const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(db, db);
  // Wire permutations between the canonical G (x) B slot and the B (x) G
  // composite the round maps are stored on.
  const Eigen::MatrixXd to_bg = commutation_matrix(dg, db);    // g(x)b -> b(x)g
  const Eigen::MatrixXd from_bg = commutation_matrix(db, dg);  // b(x)g -> g(x)b

  Eigen::MatrixXd total =
      Eigen::MatrixXd::Identity(da * dg * db, da * dg * db);
  for (const auto& round : c.rounds) {
    total = kron(round.on_ag.matrix, id_b) * total;
    total = kron(id_a, from_bg * round.on_bg.matrix * to_bg) * total;
  }
  return total;
}

}  // namespace

State apply_circuit(const MediatedCircuit& c, const State& input) {
  check_circuit(c);
  const auto ab = compose(c.a, c.b);
  if (!same_system(input.system, ab))
    throw SystemMismatch("circuit input must live on A (x) B");

  const int da = c.a->dim();
  const int dg = c.g->dim();
  const int db = c.b->dim();

  // A(x)B (x) s  ->  A (x) G (x) B.
  Eigen::VectorXd x = kron_vec(input.coeffs, c.initial_field.coeffs);
  const Eigen::MatrixXd swap_bg = commutation_matrix(db, dg);  // b(x)g -> g(x)b
  Eigen::VectorXd tri(da * dg * db);
  for (int i = 0; i < da; ++i)
    tri.segment(i * dg * db, dg * db) =
        swap_bg * x.segment(i * db * dg, db * dg);

  tri = tripartite_matrix(c) * tri;

  // Contract the G wire with the final effect (discard by default).
  const Eigen::VectorXd eff = c.final_field_effect
                                  ? c.final_field_effect->coeffs
                                  : c.g->unit_effect_coeffs();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(da * db);
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      out.segment(i * db, db) +=
          eff(g) * tri.segment((i * dg + g) * db, db);
  return State{ab, std::move(out)};
}

Eigen::MatrixXd circuit_matrix(const MediatedCircuit& c) {
  check_circuit(c);
  const int da = c.a->dim();
  const int dg = c.g->dim();
  const int db = c.b->dim();
  const Eigen::MatrixXd id_a = Eigen::MatrixXd::Identity(da, da);
  const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(db, db);

  // Injection A(x)B -> A(x)G(x)B with the initial field on the G slot.
  Eigen::MatrixXd inject(da * dg * db, da * db);
  inject.setZero();
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      for (int j = 0; j < db; ++j)
        inject((i * dg + g) * db + j, i * db + j) = c.initial_field.coeffs(g);

  const Eigen::VectorXd eff = c.final_field_effect
                                  ? c.final_field_effect->coeffs
                                  : c.g->unit_effect_coeffs();
  Eigen::MatrixXd contract(da * db, da * dg * db);
  contract.setZero();
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      for (int j = 0; j < db; ++j)
        contract(i * db + j, (i * dg + g) * db + j) = eff(g);

  return contract * tripartite_matrix(c) * inject;
}

namespace {

// (id (x) eps_out^T) . M . (id (x) in_vec) on a Matter (x) G composite:
// the local block a trajectory induces on the matter wire.
Eigen::MatrixXd local_block(const Eigen::MatrixXd& m, int dm, int n,
                            const Eigen::VectorXd& g_in, int g_out) {
  Eigen::MatrixXd block(dm, dm);
  for (int i = 0; i < dm; ++i)
    for (int k = 0; k < dm; ++k) {
      double v = 0.0;
      for (int x = 0; x < n; ++x) {
        const double w = g_in(x);
        if (w != 0.0) v += m(i * n + g_out, k * n + x) * w;
      }
      block(i, k) = v;
    }
  return block;
}

bool exactly_zero(const Eigen::MatrixXd& m) {
  return m.cwiseAbs().maxCoeff() == 0.0;
}

struct Enumerator {
  const MediatedCircuit& c;
  int n, da, db;
  Eigen::VectorXd final_eff;
  std::vector<ProductMapTerm>* out;
  std::vector<int> trajectory;

  void run(std::size_t round, const Eigen::VectorXd& g_in,
           const Eigen::MatrixXd& acc_a, const Eigen::MatrixXd& acc_b) {
    const auto& maps = c.rounds[round];
    const bool last = round + 1 == c.rounds.size();
    for (int a_out = 0; a_out < n; ++a_out) {
      Eigen::MatrixXd block_a =
          local_block(maps.on_ag.matrix, da, n, g_in, a_out);
      Eigen::MatrixXd next_a = block_a * acc_a;
      if (exactly_zero(next_a)) continue;
      trajectory.push_back(a_out);
      const Eigen::VectorXd delta_a = Eigen::VectorXd::Unit(n, a_out);
      for (int b_out = 0; b_out < n; ++b_out) {
        Eigen::MatrixXd block_b =
            local_block(maps.on_bg.matrix, db, n, delta_a, b_out);
        Eigen::MatrixXd next_b = block_b * acc_b;
        trajectory.push_back(b_out);
        if (last) {
          next_b *= final_eff(b_out);
          if (!exactly_zero(next_b)) {
            out->push_back(ProductMapTerm{
                trajectory,
                Transformation{c.a, c.a, next_a,
                               DiscardBehaviour::NonIncreasing},
                Transformation{c.b, c.b, std::move(next_b),
                               DiscardBehaviour::NonIncreasing}});
          }
        } else if (!exactly_zero(next_b)) {
          run(round + 1, Eigen::VectorXd::Unit(n, b_out), next_a, next_b);
        }
        trajectory.pop_back();
      }
      trajectory.pop_back();
    }
  }
};

}  // namespace

std::vector<ProductMapTerm> locc_decompose(const MediatedCircuit& c) {
  check_circuit(c);
  if (!c.g->is_simplex())
    throw NotClassical(
        "LOCC decomposition requires a classical (simplex) mediator");
  const int n = c.g->sample_space_size();
  const int da = c.a->dim();
  const int db = c.b->dim();

  // n^(2 rounds) trajectories; refuse past the cap.
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < 2 * c.rounds.size(); ++k) {
    count *= static_cast<std::uint64_t>(n);
    if (count > limits().trajectory_cap)
      throw TrajectoryBlowup("trajectory count exceeds the configured cap");
  }

  const Eigen::VectorXd final_eff = c.final_field_effect
                                        ? c.final_field_effect->coeffs
                                        : c.g->unit_effect_coeffs();
  std::vector<ProductMapTerm> terms;
  if (c.rounds.empty()) {
    // Empty circuit: the field is prepared and immediately measured; the
    // scalar it contributes rides on the A side.
    const double scalar = final_eff.dot(c.initial_field.coeffs);
    terms.push_back(ProductMapTerm{
        {},
        Transformation{c.a, c.a,
                       scalar * Eigen::MatrixXd::Identity(da, da),
                       DiscardBehaviour::NonIncreasing},
        Transformation{c.b, c.b, Eigen::MatrixXd::Identity(db, db),
                       DiscardBehaviour::NonIncreasing}});
    return terms;
  }

  Enumerator en{c, n, da, db, final_eff, &terms, {}};
  en.run(0, c.initial_field.coeffs, Eigen::MatrixXd::Identity(da, da),
         Eigen::MatrixXd::Identity(db, db));
  return terms;
}

Transformation reconstruct_channel(const std::vector<ProductMapTerm>& terms) {
  if (terms.empty()) throw ArityMismatch("no product-map terms");
  const auto& first = terms.front();
  const auto in = compose(first.map_a.input, first.map_b.input);
  const auto out = compose(first.map_a.output, first.map_b.output);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(out->dim(), in->dim());
  for (const auto& t : terms) {
    if (!same_system(t.map_a.input, first.map_a.input) ||
        !same_system(t.map_b.input, first.map_b.input))
      throw SystemMismatch("inconsistent systems across product-map terms");
    sum += kron(t.map_a.matrix, t.map_b.matrix);
  }
  // Branch sums of instruments are preserving; post-selected circuits are
  // merely non-increasing. Read it off the unit condition.
  const Eigen::RowVectorXd pushed =
      out->unit_effect_coeffs().transpose() * sum;
  const bool preserving =
      (pushed.transpose() - in->unit_effect_coeffs()).cwiseAbs().maxCoeff() <=
      tolerances().cone;
  return Transformation{in, out, std::move(sum),
                        preserving ? DiscardBehaviour::Preserving
                                   : DiscardBehaviour::NonIncreasing};
}

Transformation build_nonmediated_circuit(
    const State& control, const std::vector<Transformation>& branch_maps) {
  if (!control.system->is_simplex())
    throw NotClassical("nonmediated control must be a classical state");
  const int n = control.system->sample_space_size();
  if (static_cast<int>(branch_maps.size()) != n)
    throw ArityMismatch("need one branch map per classical outcome");
  const auto& first = branch_maps.front();
  Eigen::MatrixXd sum =
      Eigen::MatrixXd::Zero(first.matrix.rows(), first.matrix.cols());
  bool all_preserving = true;
  for (int x = 0; x < n; ++x) {
    const auto& b = branch_maps[x];
    if (!same_system(b.input, first.input) ||
        !same_system(b.output, first.output))
      throw SystemMismatch("branch maps on different systems");
    sum += control.coeffs(x) * b.matrix;
    all_preserving =
        all_preserving && b.behaviour == DiscardBehaviour::Preserving;
  }
  const bool normalized =
      std::abs(control.norm() - 1.0) <= tolerances().cone;
  return Transformation{first.input, first.output, std::move(sum),
                        all_preserving && normalized
                            ? DiscardBehaviour::Preserving
                            : DiscardBehaviour::NonIncreasing};
}

}  // namespace gptm
