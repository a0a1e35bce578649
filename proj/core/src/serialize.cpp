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

#include "gptm/serialize.hpp"

#include <string>

namespace gptm {

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vec_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& x : j) v(i++) = x.get<double>();
  return v;
}

json mat_to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(m(r, c));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", a}};
}

Eigen::MatrixXd mat_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw Error("matrix payload size does not match rows*cols");
  Eigen::MatrixXd m(rows, cols);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[i++].get<double>();
  return m;
}

std::string behaviour_name(DiscardBehaviour b) {
  return b == DiscardBehaviour::Preserving ? "preserving" : "nonincreasing";
}

DiscardBehaviour behaviour_from(const std::string& s) {
  if (s == "preserving") return DiscardBehaviour::Preserving;
  if (s == "nonincreasing") return DiscardBehaviour::NonIncreasing;
  throw Error("unknown discard behaviour: " + s);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Separable:
      return "separable";
    case Verdict::Entangled:
      return "entangled";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

json system_to_json(const SystemPtr& sys) {
  switch (sys->kind()) {
    case SystemKind::Classical:
      return json{{"kind", "classical"}, {"size", sys->param()}};
    case SystemKind::Quantum:
      return json{{"kind", "quantum"}, {"hilbert_dim", sys->param()}};
    case SystemKind::Composite:
      return json{{"kind", "composite"},
                  {"left", system_to_json(sys->left())},
                  {"right", system_to_json(sys->right())}};
    case SystemKind::Custom: {
      json states = json::array();
      for (const auto& s : sys->extreme_states()) states.push_back(vec_to_json(s));
      json effects = json::array();
      for (const auto& e : sys->extremal_effects())
        effects.push_back(vec_to_json(e));
      return json{{"kind", "custom"},
                  {"extreme_states", states},
                  {"extremal_effects", effects},
                  {"unit_effect", vec_to_json(sys->unit_effect_coeffs())}};
    }
  }
  throw Error("unknown system kind");
}

SystemPtr system_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "classical") return System::classical(j.at("size").get<int>());
  if (kind == "quantum")
    return System::quantum(j.at("hilbert_dim").get<int>());
  if (kind == "composite")
    return System::composite(system_from_json(j.at("left")),
                             system_from_json(j.at("right")));
  if (kind == "custom") {
    std::vector<Eigen::VectorXd> states, effects;
    for (const auto& s : j.at("extreme_states")) states.push_back(vec_from_json(s));
    for (const auto& e : j.at("extremal_effects"))
      effects.push_back(vec_from_json(e));
    return System::custom(std::move(states), std::move(effects),
                          vec_from_json(j.at("unit_effect")));
  }
  throw Error("unknown system kind: " + kind);
}

json state_to_json(const State& s) {
  return json{{"system", system_to_json(s.system)},
              {"coeffs", vec_to_json(s.coeffs)}};
}

State state_from_json(const json& j) {
  auto sys = system_from_json(j.at("system"));
  auto coeffs = vec_from_json(j.at("coeffs"));
  if (coeffs.size() != sys->dim())
    throw Error("state coefficient count does not match the system dimension");
  return State{std::move(sys), std::move(coeffs)};
}

json effect_to_json(const Effect& e) {
  return json{{"system", system_to_json(e.system)},
              {"coeffs", vec_to_json(e.coeffs)}};
}

Effect effect_from_json(const json& j) {
  auto sys = system_from_json(j.at("system"));
  auto coeffs = vec_from_json(j.at("coeffs"));
  if (coeffs.size() != sys->dim())
    throw Error("effect coefficient count does not match the system dimension");
  return Effect{std::move(sys), std::move(coeffs)};
}

json transformation_to_json(const Transformation& t) {
  return json{{"input", system_to_json(t.input)},
              {"output", system_to_json(t.output)},
              {"matrix", mat_to_json(t.matrix)},
              {"behaviour", behaviour_name(t.behaviour)}};
}

Transformation transformation_from_json(const json& j) {
  auto in = system_from_json(j.at("input"));
  auto out = system_from_json(j.at("output"));
  auto m = mat_from_json(j.at("matrix"));
  if (m.rows() != out->dim() || m.cols() != in->dim())
    throw Error("transformation matrix shape does not match the systems");
  return Transformation{std::move(in), std::move(out), std::move(m),
                        behaviour_from(j.at("behaviour").get<std::string>())};
}

json circuit_to_json(const MediatedCircuit& c) {
  json rounds = json::array();
  for (const auto& r : c.rounds)
    rounds.push_back(json{{"on_ag", transformation_to_json(r.on_ag)},
                          {"on_bg", transformation_to_json(r.on_bg)}});
  json out{{"a", system_to_json(c.a)},
           {"b", system_to_json(c.b)},
           {"g", system_to_json(c.g)},
           {"initial_field", state_to_json(c.initial_field)},
           {"rounds", rounds}};
  out["final_field_effect"] = c.final_field_effect
                                  ? effect_to_json(*c.final_field_effect)
                                  : json(nullptr);
  return out;
}

MediatedCircuit circuit_from_json(const json& j) {
  MediatedCircuit c;
  c.a = system_from_json(j.at("a"));
  c.b = system_from_json(j.at("b"));
  c.g = system_from_json(j.at("g"));
  c.initial_field = state_from_json(j.at("initial_field"));
  for (const auto& r : j.at("rounds"))
    c.rounds.push_back({transformation_from_json(r.at("on_ag")),
                        transformation_from_json(r.at("on_bg"))});
  const auto& eff = j.at("final_field_effect");
  if (!eff.is_null()) c.final_field_effect = effect_from_json(eff);
  return c;
}

json certificate_to_json(const SeparabilityCertificate& c) {
  json out{{"verdict", verdict_name(c.verdict)},
           {"negativity", c.negativity},
           {"reconstruction_error", c.reconstruction_error}};
  if (c.decomposition) {
    json terms = json::array();
    for (const auto& t : *c.decomposition)
      terms.push_back(json{{"weight", t.weight},
                           {"on_a", vec_to_json(t.on_a.coeffs)},
                           {"on_b", vec_to_json(t.on_b.coeffs)}});
    out["decomposition"] = terms;
  } else {
    out["decomposition"] = json(nullptr);
  }
  if (c.witness) {
    out["witness"] = json{{"functional", vec_to_json(c.witness->functional)},
                          {"max_on_products", c.witness->max_on_products},
                          {"value_on_state", c.witness->value_on_state}};
  } else {
    out["witness"] = json(nullptr);
  }
  return out;
}

json validation_report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{
        {"name", c.name}, {"pass", c.pass}, {"violation", c.violation}});
  return json{{"pass", r.pass}, {"checks", checks}};
}

json no_go_report_to_json(const NoGoReport& r) {
  // threads is omitted: results are independent of it and serialized reports
  // must not vary with the worker count.
  json cfg{{"trials", r.config.trials}, {"dim_a", r.config.dim_a},
           {"dim_b", r.config.dim_b},   {"g_size", r.config.g_size},
           {"rounds", r.config.rounds}, {"seed", r.config.seed},
           {"tol", r.config.tol}};
  json out{{"config", cfg},
           {"trials_run", r.trials_run},
           {"max_negativity", r.max_negativity},
           {"max_lp_residual", r.max_lp_residual},
           {"lp_failures", r.lp_failures},
           {"pass", r.pass},
           {"worst_trial", r.worst_trial}};
  out["worst_case"] = r.worst_case_json.empty()
                          ? json(nullptr)
                          : json::parse(r.worst_case_json);
  return out;
}

json condition_profile_to_json(const ConditionProfile& p) {
  return json{{"model", p.name},
              {"generates_entanglement", p.condition1_met},
              {"interaction_mediated", p.condition2_met},
              {"mediator_classical", p.condition3_met},
              {"demo_negativity", p.demo_negativity},
              {"demo_description", p.demo_description}};
}

json signalling_report_to_json(const SignallingReport& r) {
  json params{{"m_a", r.params.m_a}, {"m_b", r.params.m_b},
              {"d", r.params.d},     {"L", r.params.L},
              {"t_a", r.params.t_a}, {"t_b", r.params.t_b}};
  return json{{"params", params},
              {"visibility_no_release", r.visibility_no_release},
              {"visibility_release", r.visibility_release},
              {"trace_distance_alice", r.trace_distance_alice},
              {"light_crossing_time", r.light_crossing_time},
              {"entangling_phase", r.entangling_phase},
              {"entangling_time_ok", r.entangling_time_ok},
              {"superluminal", r.superluminal},
              {"distinguishability_threshold", r.distinguishability_threshold},
              {"warnings", r.warnings}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gptm
