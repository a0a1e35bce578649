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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "gptm/classical.hpp"
#include "gptm/compose.hpp"
#include "gptm/config.hpp"
#include "gptm/quantum.hpp"
#include "gptm/scenarios.hpp"
#include "gptm/separability.hpp"
#include "gptm/serialize.hpp"
#include "gptm/signalling.hpp"
#include "gptm/validate.hpp"
#include "gptm/version.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitVerdictFail = 2;

struct GlobalFlags {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string out;
  std::string format = "json";
  int threads = 0;  // 0 -> available parallelism
};

int effective_threads(const GlobalFlags& g) {
  if (g.threads > 0) return g.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

gptm::json run_config_json(const std::string& command, const GlobalFlags& g,
                           gptm::json params) {
  // The thread count is deliberately not embedded: results are independent
  // of it and reports must stay byte-identical across --threads values.
  return gptm::json{{"command", command},
                    {"seed", g.seed},
                    {"tol", g.tol},
                    {"format", g.format},
                    {"params", std::move(params)}};
}

gptm::json report_envelope(const std::string& command, const GlobalFlags& g,
                           gptm::json params, const std::string& key,
                           gptm::json payload) {
  gptm::json out;
  out["version"] = gptm::kVersion;
  out["run_config"] = run_config_json(command, g, std::move(params));
  out[key] = std::move(payload);
  return out;
}

int emit(const GlobalFlags& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << g.out << "\n";
    return kExitConfigError;
  }
  f << text;
  return f.good() ? kExitOk : kExitConfigError;
}

gptm::json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw gptm::Error("cannot open input file: " + path);
  return gptm::json::parse(f);
}

// Accepts a plain number, "pi", or a "<multiplier>pi" shorthand like "0.5pi".
double parse_phase(const std::string& raw) {
  std::string s = raw;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s == "pi") return kPi;
  if (s.size() > 2 && s.substr(s.size() - 2) == "pi")
    return std::stod(s.substr(0, s.size() - 2)) * kPi;
  return std::stod(s);
}

// Fixed 17-significant-digit rendering for the CSV path so rows are
// byte-stable and round-trip exactly.
std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string signalling_csv_header() {
  return "m_a,m_b,d,L,t_a,t_b,visibility_no_release,visibility_release,"
         "trace_distance_alice,light_crossing_time,entangling_phase,"
         "entangling_time_ok,superluminal\n";
}

std::string signalling_csv_row(const gptm::SignallingReport& r) {
  std::ostringstream row;
  row << fmt_double(r.params.m_a) << ',' << fmt_double(r.params.m_b) << ','
      << fmt_double(r.params.d) << ',' << fmt_double(r.params.L) << ','
      << fmt_double(r.params.t_a) << ',' << fmt_double(r.params.t_b) << ','
      << fmt_double(r.visibility_no_release) << ','
      << fmt_double(r.visibility_release) << ','
      << fmt_double(r.trace_distance_alice) << ','
      << fmt_double(r.light_crossing_time) << ','
      << fmt_double(r.entangling_phase) << ','
      << (r.entangling_time_ok ? 1 : 0) << ',' << (r.superluminal ? 1 : 0)
      << '\n';
  return row.str();
}

gptm::ProtocolParams params_from_json(const gptm::json& j) {
  gptm::ProtocolParams p;
  p.m_a = j.value("m_a", p.m_a);
  p.m_b = j.value("m_b", p.m_b);
  p.d = j.value("d", p.d);
  p.L = j.value("L", p.L);
  p.t_a = j.value("t_a", p.t_a);
  p.t_b = j.value("t_b", p.t_b);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for mediated interactions in generalised "
               "probabilistic theories"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Random seed (fixed seed => byte-identical output)");
  app.add_option("--tol", g.tol, "Cone/LP tolerance override (0 = library default)");
  app.add_option("--out", g.out, "Output file (stdout when omitted)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads,
                 "Worker threads (0 = available parallelism)");
  app.set_config("--config", "", "Config file with default flag values")
      ->envname("GPTM_CONFIG");

  // verify-nogo
  auto* nogo = app.add_subcommand(
      "verify-nogo", "Randomized sweep: classical mediators never entangle");
  gptm::NoGoConfig nogo_cfg;
  nogo->add_option("--trials", nogo_cfg.trials, "Number of random circuits")
      ->check(CLI::PositiveNumber);
  nogo->add_option("--dim-a", nogo_cfg.dim_a, "Hilbert dimension of A")
      ->check(CLI::Range(2, 4));
  nogo->add_option("--dim-b", nogo_cfg.dim_b, "Hilbert dimension of B")
      ->check(CLI::Range(2, 4));
  nogo->add_option("--g-size", nogo_cfg.g_size, "Classical mediator size")
      ->check(CLI::Range(2, 8));
  nogo->add_option("--rounds", nogo_cfg.rounds, "Interaction rounds")
      ->check(CLI::Range(1, 4));

  // locc-decompose
  auto* locc = app.add_subcommand(
      "locc-decompose", "Decompose a mediated circuit into product-map terms");
  std::string locc_file;
  locc->add_option("circuit", locc_file, "Circuit JSON file")->required();

  // bmv
  auto* bmv = app.add_subcommand(
      "bmv", "Gravitationally induced entanglement between two masses");
  std::string phase_gap_raw;
  double bmv_ma = 1e-14, bmv_mb = 1e-14, bmv_d = 100e-6, bmv_L = 300e-6,
         bmv_T = 2.5;
  double bmv_lambda = -1.0;
  bmv->add_option("--phase-gap", phase_gap_raw,
                  "Drive by phase gap directly (number, 'pi' or '<x>pi')");
  bmv->add_option("--m-a", bmv_ma, "Mass A [kg]");
  bmv->add_option("--m-b", bmv_mb, "Mass B [kg]");
  bmv->add_option("--separation", bmv_d, "Branch separation d [m]");
  bmv->add_option("--distance", bmv_L, "Inter-mass distance L [m]");
  bmv->add_option("--time", bmv_T, "Interaction time T [s]");
  bmv->add_option("--collapse", bmv_lambda,
                  "Apply local dephasing with this rate to each mass");

  // signalling
  auto* sig = app.add_subcommand(
      "signalling", "Trap-release protocol and superluminal-signalling check");
  gptm::ProtocolParams sig_params;
  std::string sweep_file;
  sig->add_option("--m-a", sig_params.m_a, "Alice's mass [kg]");
  sig->add_option("--m-b", sig_params.m_b, "Bob's probe mass [kg]");
  sig->add_option("--separation", sig_params.d, "Branch separation d [m]");
  sig->add_option("--distance", sig_params.L, "Alice-Bob distance L [m]");
  sig->add_option("--t-a", sig_params.t_a, "Alice's recombination time [s]");
  sig->add_option("--t-b", sig_params.t_b, "Bob's entangling time [s]");
  sig->add_option("--sweep", sweep_file,
                  "JSON array of parameter sets (CSV output)");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Which no-go conditions a model class violates");
  std::string model_name;
  classify
      ->add_option("model", model_name,
                   "collapse | nonmediated | quantum-field")
      ->required()
      ->check(CLI::IsMember({"collapse", "nonmediated", "quantum-field"}));

  // validate
  auto* validate = app.add_subcommand(
      "validate", "Validate a serialized object against its invariants");
  std::string validate_file;
  validate->add_option("object", validate_file, "Object JSON file")->required();

  // Let global flags (--seed, --out, ...) appear after the subcommand name.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (nogo->parsed()) {
      nogo_cfg.seed = g.seed;
      nogo_cfg.tol = g.tol;
      nogo_cfg.threads = effective_threads(g);
      const gptm::NoGoReport report = gptm::verify_no_go(nogo_cfg);
      gptm::json params{{"trials", nogo_cfg.trials},
                        {"dim_a", nogo_cfg.dim_a},
                        {"dim_b", nogo_cfg.dim_b},
                        {"g_size", nogo_cfg.g_size},
                        {"rounds", nogo_cfg.rounds}};
      const int rc = emit(
          g, gptm::dump_canonical(report_envelope(
                 "verify-nogo", g, std::move(params), "report",
                 gptm::no_go_report_to_json(report))));
      if (rc != kExitOk) return rc;
      return report.pass ? kExitOk : kExitVerdictFail;
    }

    if (locc->parsed()) {
      const gptm::MediatedCircuit c =
          gptm::circuit_from_json(read_json_file(locc_file));
      const auto terms = gptm::locc_decompose(c);
      gptm::json jterms = gptm::json::array();
      for (const auto& t : terms)
        jterms.push_back(
            gptm::json{{"trajectory", t.trajectory},
                       {"map_a", gptm::transformation_to_json(t.map_a)},
                       {"map_b", gptm::transformation_to_json(t.map_b)}});
      gptm::json payload{{"term_count", terms.size()}, {"terms", jterms}};
      return emit(g, gptm::dump_canonical(report_envelope(
                         "locc-decompose", g,
                         gptm::json{{"circuit", locc_file}}, "decomposition",
                         std::move(payload))));
    }

    if (bmv->parsed()) {
      gptm::BmvResult r;
      gptm::json params;
      if (!phase_gap_raw.empty()) {
        const double gap = parse_phase(phase_gap_raw);
        r = gptm::bmv_from_phases(gap, 0.0, 0.0, 0.0);
        params["phase_gap"] = gap;
      } else {
        r = gptm::bmv_protocol(bmv_ma, bmv_mb, bmv_d, bmv_L, bmv_T);
        params = gptm::json{{"m_a", bmv_ma}, {"m_b", bmv_mb},
                            {"separation", bmv_d}, {"distance", bmv_L},
                            {"time", bmv_T}};
      }
      if (bmv_lambda >= 0.0) {
        const gptm::Transformation local = gptm::collapse_channel(bmv_lambda);
        r.state = gptm::product_map(local, local).apply(r.state);
        r.density = gptm::state_to_density(r.state);
        r.negativity = gptm::negativity(r.density, 2, 2);
        params["collapse"] = bmv_lambda;
      }
      gptm::json payload{{"phase_gap", r.phase_gap},
                         {"negativity", r.negativity},
                         {"state", gptm::state_to_json(r.state)}};
      return emit(g, gptm::dump_canonical(report_envelope(
                         "bmv", g, std::move(params), "result",
                         std::move(payload))));
    }

    if (sig->parsed()) {
      if (!sweep_file.empty()) {
        std::string csv = signalling_csv_header();
        for (const auto& row : read_json_file(sweep_file))
          csv += signalling_csv_row(
              gptm::assess_superluminality(params_from_json(row)));
        return emit(g, csv);
      }
      const gptm::SignallingReport report =
          gptm::assess_superluminality(sig_params);
      if (g.format == "csv")
        return emit(g, signalling_csv_header() + signalling_csv_row(report));
      gptm::json params{{"m_a", sig_params.m_a}, {"m_b", sig_params.m_b},
                        {"separation", sig_params.d},
                        {"distance", sig_params.L},
                        {"t_a", sig_params.t_a}, {"t_b", sig_params.t_b}};
      return emit(g, gptm::dump_canonical(report_envelope(
                         "signalling", g, std::move(params), "report",
                         gptm::signalling_report_to_json(report))));
    }

    if (classify->parsed()) {
      gptm::Model model = gptm::Model::CollapseDecoherence;
      if (model_name == "nonmediated") model = gptm::Model::NonMediated;
      if (model_name == "quantum-field") model = gptm::Model::NonClassicalG;
      const gptm::ConditionProfile profile = gptm::classify_model(model);
      return emit(g, gptm::dump_canonical(report_envelope(
                         "classify", g, gptm::json{{"model", model_name}},
                         "profile",
                         gptm::condition_profile_to_json(profile))));
    }

    if (validate->parsed()) {
      const gptm::json j = read_json_file(validate_file);
      const std::string type = j.at("type").get<std::string>();
      const gptm::json& obj = j.at("object");
      gptm::ValidationReport report;
      if (type == "system") {
        report = gptm::validate_system(gptm::system_from_json(obj));
      } else if (type == "state") {
        report = gptm::validate_state(gptm::state_from_json(obj));
      } else if (type == "effect") {
        report = gptm::validate_effect(gptm::effect_from_json(obj));
      } else if (type == "transformation") {
        report = gptm::validate_transformation(
            gptm::transformation_from_json(obj));
      } else if (type == "instrument") {
        gptm::Instrument instr;
        for (const auto& b : obj.at("branches"))
          instr.branches.push_back(gptm::transformation_from_json(b));
        report = gptm::validate_instrument(instr);
      } else {
        throw gptm::Error("unknown object type: " + type);
      }
      const int rc = emit(
          g, gptm::dump_canonical(report_envelope(
                 "validate", g,
                 gptm::json{{"object", validate_file}, {"type", type}},
                 "report", gptm::validation_report_to_json(report))));
      if (rc != kExitOk) return rc;
      return report.pass ? kExitOk : kExitVerdictFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
