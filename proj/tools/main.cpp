// Copyright 2026 The graystate developers
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

// graystate: synthesize and verify circuits preparing fixed-digit-sum
// qudit superpositions.  Subcommands: dim, graycode, prepare, verify.
// Exit codes: 0 success, 2 invalid spec or input, 3 search failure,
// 4 verification failure.

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graystate/angles.hpp"
#include "graystate/circuit.hpp"
#include "graystate/compositions.hpp"
#include "graystate/errors.hpp"
#include "graystate/operators.hpp"
#include "graystate/simulator.hpp"
#include "graystate/states.hpp"

namespace gs = graystate;
using nlohmann::json;

namespace {

struct RunConfig {
  int n = -1;
  int k = -1;
  int two_s = -1;
  std::string provider;
  std::string generator = "walsh";
  std::string start;
  std::string amps_path;
  std::string roots_path;
  int magnon_q = 0;
  std::string out_path;
  std::string circuit_out;
  std::string state_out;
  std::string report_out;
  bool json_output = false;
  bool csv = false;
  bool verify_code = false;
  bool elide_identity = false;
  bool auto_normalize = false;
  double amp_threshold = 1e-12;
  double fidelity_tol = 1e-10;
  double residual_tol = -1.0;  // provider-dependent default when negative
  double sz_tol = 1e-10;
  double bethe_eq_tol = 1e-9;
  std::uint64_t max_state_entries = gs::kDefaultMaxStateEntries;
};

std::uint64_t code_cap_from_env() {
  const char* raw = std::getenv("GRAYSTATE_MAX_DIM");
  if (raw == nullptr) return gs::kDefaultMaxCodeEntries;
  const std::string text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw gs::InvalidSpecError("GRAYSTATE_MAX_DIM must be a positive integer");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gs::IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gs::IoError("cannot write '" + path + "'");
  out << content;
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw gs::IoError("cannot parse '" + path + "': " + e.what());
  }
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

// Flattens a report to "key,value" CSV lines; nested objects use dotted
// keys, arrays join with ';'.
void flatten_report(const json& j, const std::string& prefix,
                    std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten_report(value, name, out);
    } else if (value.is_array()) {
      out << name << ',';
      for (std::size_t t = 0; t < value.size(); ++t) {
        if (t != 0) out << ';';
        out << value[t].dump();
      }
      out << '\n';
    } else {
      out << name << ',' << value.dump() << '\n';
    }
  }
}

std::string render_report(const json& report, bool csv) {
  if (!csv) return report.dump(2) + "\n";
  std::ostringstream oss;
  oss << "key,value\n";
  flatten_report(report, "", oss);
  return oss.str();
}

gs::CompositionSpec spec_from_flags(const RunConfig& config) {
  if (config.n < 0 || config.k < 0 || config.two_s < 0) {
    throw gs::InvalidSpecError("-n, -k and --two-s are required");
  }
  gs::CompositionSpec spec{config.n, config.k, config.two_s};
  spec.validate();
  return spec;
}

gs::GrayCode build_code(const gs::CompositionSpec& spec,
                        const RunConfig& config) {
  const std::uint64_t cap = code_cap_from_env();
  if (config.generator == "walsh") {
    if (!config.start.empty()) {
      throw gs::InvalidSpecError("--start applies only to --gen warnsdorff");
    }
    return gs::walsh_gray_code(spec, cap);
  }
  std::optional<gs::Ditstring> start;
  if (!config.start.empty()) {
    start = gs::parse_ditstring(config.start, spec);
  }
  return gs::warnsdorff_gray_code(spec, start, cap);
}

struct ResolvedTarget {
  gs::CompositionSpec spec;
  gs::GrayCode code;
  std::vector<gs::Complex> amplitudes;
  bool real_valued = false;
  std::optional<gs::BetheRoots> roots;
};

ResolvedTarget resolve_target(const RunConfig& config) {
  ResolvedTarget target;
  if (config.provider == "aklt") {
    if (config.n < 0) throw gs::InvalidSpecError("-n is required");
    if (config.k >= 0 && config.k != config.n) {
      throw gs::InvalidSpecError("the valence bond solid fixes k = n");
    }
    if (config.two_s >= 0 && config.two_s != 2) {
      throw gs::InvalidSpecError("the valence bond solid fixes two_s = 2");
    }
    target.spec = {config.n, config.n, 2};
    target.spec.validate();
    target.code = build_code(target.spec, config);
    target.amplitudes = gs::aklt_amplitudes(target.code);
    target.real_valued = true;
  } else if (config.provider == "dicke") {
    target.spec = spec_from_flags(config);
    target.code = build_code(target.spec, config);
    target.amplitudes = gs::dicke_amplitudes(target.code);
    target.real_valued = true;
  } else if (config.provider == "bethe") {
    gs::BetheRoots roots;
    if (!config.roots_path.empty() && config.magnon_q > 0) {
      throw gs::InvalidSpecError("pass either --roots or --q, not both");
    }
    if (!config.roots_path.empty()) {
      roots = gs::bethe_roots_from_json(parse_json_file(config.roots_path));
    } else if (config.magnon_q > 0) {
      if (config.n < 0 || config.two_s < 0) {
        throw gs::InvalidSpecError("--q needs -n and --two-s");
      }
      roots = gs::bethe_one_magnon(config.n, config.two_s, config.magnon_q);
    } else {
      throw gs::InvalidSpecError("provider bethe needs --roots or --q");
    }
    if (config.n >= 0 && config.n != roots.n) {
      throw gs::InvalidSpecError("-n contradicts the roots");
    }
    if (config.k >= 0 && config.k != roots.k) {
      throw gs::InvalidSpecError("-k contradicts the roots");
    }
    if (config.two_s >= 0 && config.two_s != roots.two_s) {
      throw gs::InvalidSpecError("--two-s contradicts the roots");
    }
    target.spec = {roots.n, roots.k, roots.two_s};
    target.spec.validate();
    target.code = build_code(target.spec, config);
    target.amplitudes = gs::bethe_amplitudes(target.code, roots);
    target.roots = std::move(roots);
  } else if (config.provider == "generic") {
    if (config.amps_path.empty()) {
      throw gs::InvalidSpecError("provider generic needs --amps");
    }
    target.spec = spec_from_flags(config);
    target.code = build_code(target.spec, config);
    const auto entries =
        gs::amplitude_entries_from_json(parse_json_file(config.amps_path));
    target.amplitudes = gs::order_along_code(entries, target.code);
  } else {
    throw gs::InvalidSpecError("unknown provider '" + config.provider + "'");
  }
  return target;
}

struct PipelineResult {
  gs::Circuit circuit;
  gs::StateVector state;
  gs::AngleSchedule schedule;
  double fidelity = 0.0;
  double norm_drift = 0.0;
  std::size_t gray_gates = 0;
  std::size_t x_gates = 0;
};

PipelineResult run_pipeline(const ResolvedTarget& target,
                            const RunConfig& config) {
  PipelineResult result;
  gs::AngleOptions options;
  options.auto_normalize = config.auto_normalize;
  if (target.real_valued) {
    std::vector<double> real(target.amplitudes.size());
    for (std::size_t t = 0; t < real.size(); ++t) {
      real[t] = target.amplitudes[t].real();
    }
    result.schedule = gs::angles_real(real, options);
  } else {
    result.schedule = gs::angles_complex(target.amplitudes, options);
  }

  const gs::ControlSchedule controls = gs::control_schedule(target.code);
  gs::AssembleOptions assemble;
  assemble.elide_identity = config.elide_identity;
  result.circuit =
      gs::assemble_circuit(target.code, result.schedule, controls, assemble);
  result.state = gs::run(result.circuit, config.max_state_entries);

  for (const gs::Gate& gate : result.circuit.gates) {
    if (std::holds_alternative<gs::GrayGate>(gate)) {
      ++result.gray_gates;
    } else {
      ++result.x_gates;
    }
  }

  // Dense target for the self-check overlap.
  gs::StateVector reference =
      gs::zero_state(target.spec.n, target.spec.d(), config.max_state_entries);
  reference.amps[0] = 0.0;
  double norm_sq = 0.0;
  for (const gs::Complex& a : target.amplitudes) norm_sq += std::norm(a);
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (std::size_t l = 0; l < target.code.entries.size(); ++l) {
    reference.amps[gs::encode_index(target.code.entries[l],
                                    target.spec.d())] =
        target.amplitudes[l] * scale;
  }
  result.fidelity = gs::fidelity(reference, result.state);

  double prepared_norm_sq = 0.0;
  for (const gs::Complex& a : result.state.amps) {
    prepared_norm_sq += std::norm(a);
  }
  result.norm_drift = std::abs(std::sqrt(prepared_norm_sq) - 1.0);
  return result;
}

int cmd_dim(const RunConfig& config) {
  const gs::CompositionSpec spec = spec_from_flags(config);
  std::cout << gs::dimension(spec) << '\n';
  return 0;
}

int cmd_graycode(const RunConfig& config) {
  const gs::CompositionSpec spec = spec_from_flags(config);
  const gs::GrayCode code = build_code(spec, config);
  if (config.verify_code) {
    const gs::GrayVerification check = gs::verify_gray_property(code);
    if (!check.ok) {
      std::cerr << "error: generated code failed verification at entry "
                << check.first_violation << ": " << check.message << '\n';
      return 4;
    }
  }
  if (config.json_output) {
    emit(config.out_path, gs::gray_code_to_json(code).dump(2) + "\n");
  } else {
    emit(config.out_path, gs::gray_code_to_text(code));
  }
  return 0;
}

int cmd_prepare(const RunConfig& config) {
  const auto start_time = std::chrono::steady_clock::now();
  const ResolvedTarget target = resolve_target(config);
  const PipelineResult result = run_pipeline(target, config);

  if (!config.circuit_out.empty()) {
    write_file(config.circuit_out,
               gs::circuit_to_json(result.circuit).dump(2) + "\n");
  }
  if (!config.state_out.empty()) {
    if (config.csv) {
      write_file(config.state_out,
                 gs::state_to_csv(result.state, config.amp_threshold));
    } else {
      write_file(config.state_out,
                 gs::state_to_json(result.state, config.amp_threshold).dump(2) +
                     "\n");
    }
  }

  json report;
  report["provider"] = config.provider;
  report["dimension"] = target.code.entries.size();
  report["gate_count"] = result.gray_gates + result.x_gates;
  report["gray_gate_count"] = result.gray_gates;
  report["x_gate_count"] = result.x_gates;
  report["fidelity_to_target"] = result.fidelity;
  report["norm_drift"] = result.norm_drift;
  if (config.provider == "aklt") {
    report["hamiltonian_residual"] = gs::eigenstate_residual(
        gs::aklt_hamiltonian(target.spec.n), result.state, 0.0);
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start_time;
  report["wall_time"] = elapsed.count();
  emit(config.report_out, render_report(report, config.csv));

  return result.fidelity >= 1.0 - config.fidelity_tol ? 0 : 4;
}

int cmd_verify(const RunConfig& config) {
  if (config.provider == "generic") {
    throw gs::InvalidSpecError(
        "provider generic has no reference Hamiltonian; use prepare");
  }
  const ResolvedTarget target = resolve_target(config);
  const PipelineResult result = run_pipeline(target, config);
  const gs::CompositionSpec& spec = target.spec;
  const double s = spec.two_s / 2.0;

  gs::OperatorSum hamiltonian;
  double energy = 0.0;
  if (config.provider == "aklt") {
    hamiltonian = gs::aklt_hamiltonian(spec.n);
  } else if (config.provider == "dicke") {
    hamiltonian = gs::total_s2(spec.n, spec.two_s);
    hamiltonian.scalar = -hamiltonian.scalar;
    for (gs::OperatorTerm& term : hamiltonian.terms) term.matrix *= -1.0;
    energy = -(s * spec.n) * (s * spec.n + 1.0);
  } else {
    hamiltonian = gs::xxx_hamiltonian(spec.n, spec.two_s);
    energy = gs::bethe_energy(*target.roots);
  }

  const double residual_tol =
      config.residual_tol >= 0.0
          ? config.residual_tol
          : (config.provider == "bethe" ? 1e-6 : 1e-9);
  const double sz_value = gs::expectation(gs::total_sz(spec.n, spec.two_s),
                                          result.state);
  const double sz_expected = s * spec.n - spec.k;
  const double residual =
      gs::eigenstate_residual(hamiltonian, result.state, energy);

  json report;
  report["provider"] = config.provider;
  report["n"] = spec.n;
  report["k"] = spec.k;
  report["two_s"] = spec.two_s;
  report["dimension"] = target.code.entries.size();
  report["fidelity_to_target"] = result.fidelity;
  report["sz_expectation"] = sz_value;
  report["sz_expected"] = sz_expected;
  report["energy"] = energy;
  report["eigenstate_residual"] = residual;

  json checks;
  checks["fidelity_ok"] = result.fidelity >= 1.0 - config.fidelity_tol;
  checks["residual_ok"] = residual <= residual_tol;
  checks["sz_ok"] = std::abs(sz_value - sz_expected) <= config.sz_tol;

  if (config.provider == "bethe") {
    const gs::Complex energy_sum = gs::bethe_energy_sum(*target.roots);
    report["energy_imag"] = energy_sum.imag();
    const std::vector<double> eq = gs::bethe_residuals(*target.roots);
    report["bethe_residuals"] = eq;
    double max_eq = 0.0;
    for (double r : eq) max_eq = std::max(max_eq, r);
    report["bethe_residual_max"] = max_eq;
    checks["bethe_equations_ok"] = max_eq <= config.bethe_eq_tol;
  }

  bool pass = true;
  for (const auto& [name, ok] : checks.items()) {
    pass = pass && ok.get<bool>();
  }
  report["checks"] = std::move(checks);
  report["pass"] = pass;
  emit(config.report_out, render_report(report, config.csv));
  return pass ? 0 : 4;
}

void add_spec_flags(CLI::App* cmd, RunConfig& config, bool required) {
  auto* n = cmd->add_option("-n,--sites", config.n, "Number of qudits");
  auto* k = cmd->add_option("-k,--digit-sum", config.k, "Digit sum");
  auto* t = cmd->add_option("--two-s", config.two_s,
                            "Levels minus one (d = two_s + 1)");
  if (required) {
    n->required();
    k->required();
    t->required();
  }
}

void add_generator_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--gen", config.generator, "Gray code generator")
      ->check(CLI::IsMember({"walsh", "warnsdorff"}));
  cmd->add_option("--start", config.start,
                  "Start ditstring (displayed form, warnsdorff only)");
}

void add_provider_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--provider", config.provider, "Amplitude provider")
      ->required()
      ->check(CLI::IsMember({"generic", "aklt", "dicke", "bethe"}));
  cmd->add_option("--amps", config.amps_path,
                  "Amplitude file (generic provider)");
  cmd->add_option("--roots", config.roots_path,
                  "Rapidity file (bethe provider)");
  cmd->add_option("--q", config.magnon_q,
                  "One-magnon momentum index (bethe provider, k = 1)");
  cmd->add_flag("--auto-normalize", config.auto_normalize,
                "Normalize input amplitudes instead of rejecting them");
  cmd->add_option("--fidelity-tol", config.fidelity_tol,
                  "Self-check fidelity tolerance");
  cmd->add_flag("--csv", config.csv, "Emit CSV instead of JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic preparation circuits for fixed-digit-sum qudit states"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* dim = app.add_subcommand("dim", "Print the sector dimension");
  add_spec_flags(dim, config, true);

  CLI::App* graycode =
      app.add_subcommand("graycode", "Generate a sector Gray code");
  add_spec_flags(graycode, config, true);
  add_generator_flags(graycode, config);
  graycode->add_option("-o,--output", config.out_path,
                       "Output path (default stdout)");
  graycode->add_flag("--json", config.json_output,
                     "Write JSON instead of text");
  graycode->add_flag("--verify", config.verify_code,
                     "Re-check the Gray property before writing");

  CLI::App* prepare = app.add_subcommand(
      "prepare", "Synthesize a circuit, simulate it, and report fidelity");
  add_spec_flags(prepare, config, false);
  add_generator_flags(prepare, config);
  add_provider_flags(prepare, config);
  prepare->add_option("--circuit-out", config.circuit_out,
                      "Write the circuit JSON here");
  prepare->add_option("--state-out", config.state_out,
                      "Write the simulated statevector here");
  prepare->add_option("--report", config.report_out,
                      "Write the report here (default stdout)");
  prepare->add_option("--amp-threshold", config.amp_threshold,
                      "Statevector dump threshold");
  prepare->add_flag("--elide-identity", config.elide_identity,
                    "Drop Gray gates with theta = phi = 0");
  prepare->add_option("--max-state-entries", config.max_state_entries,
                      "Cap on d^n statevector entries");

  CLI::App* verify = app.add_subcommand(
      "verify", "Prepare a state and check it against its reference physics");
  add_spec_flags(verify, config, false);
  add_generator_flags(verify, config);
  add_provider_flags(verify, config);
  verify->add_option("--report", config.report_out,
                     "Write the report here (default stdout)");
  verify->add_option("--residual-tol", config.residual_tol,
                     "Eigenstate residual tolerance "
                     "(default 1e-9; 1e-6 for bethe)");
  verify->add_option("--sz-tol", config.sz_tol,
                     "Magnetization check tolerance");
  verify->add_option("--bethe-eq-tol", config.bethe_eq_tol,
                     "Bethe equation residual tolerance");
  verify->add_option("--max-state-entries", config.max_state_entries,
                     "Cap on d^n statevector entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dim->parsed()) return cmd_dim(config);
    if (graycode->parsed()) return cmd_graycode(config);
    if (prepare->parsed()) return cmd_prepare(config);
    return cmd_verify(config);
  } catch (const gs::SearchFailureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
