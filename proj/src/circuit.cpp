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

#include "graystate/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace graystate {

namespace {

void check_gray_gate_levels(const GrayGate& gate, int d) {
  if (d < 2) throw ValidationError("d must be at least 2");
  if (gate.i == gate.j) throw ValidationError("gate qudits must differ");
  if (gate.m_i < 0 || gate.m_i > d - 2) {
    throw ValidationError("m_i must lie in 0 .. d - 2");
  }
  if (gate.m_j < 1 || gate.m_j > d - 1) {
    throw ValidationError("m_j must lie in 1 .. d - 1");
  }
}

}  // namespace

Eigen::MatrixXcd gray_gate_matrix(const GrayGate& gate, int d) {
  check_gray_gate_levels(gate, d);
  const int dim = d * d;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  const int a = gate.m_i * d + gate.m_j;
  const int b = (gate.m_i + 1) * d + (gate.m_j - 1);
  const double c = std::cos(gate.theta);
  const double s = std::sin(gate.theta);
  const Complex e = std::polar(1.0, gate.phi);
  m(a, a) = c;
  m(b, a) = e * s;
  m(a, b) = -s;
  m(b, b) = e * c;
  return m;
}

GrayGateDecomposition gray_gate_decomposition(const GrayGate& gate, int d) {
  check_gray_gate_levels(gate, d);
  GrayGateDecomposition dec;
  dec.pre = {gate.i, {gate.j, gate.m_j}, 1};
  dec.rotation = {gate.j, {gate.i, gate.m_i + 1},
                  gate.m_j, gate.m_j - 1, gate.theta, gate.phi};
  dec.post = {gate.i, {gate.j, gate.m_j}, -1};
  return dec;
}

Eigen::MatrixXcd decomposition_matrix(const GrayGateDecomposition& dec,
                                      int d) {
  const int dim = d * d;
  // Index of |mu>_i |nu>_j is mu * d + nu; i is the shift target, j the
  // rotation target.
  auto shift_matrix = [&](const ControlledShift& g) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int mu = 0; mu < d; ++mu) {
      for (int nu = 0; nu < d; ++nu) {
        const int from = mu * d + nu;
        const int to = (nu == g.control.value)
                           ? (((mu + g.step) % d + d) % d) * d + nu
                           : from;
        m(to, from) = 1.0;
      }
    }
    return m;
  };
  auto givens_matrix = [&](const ControlledGivens& g) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    const double c = std::cos(g.theta);
    const double s = std::sin(g.theta);
    const Complex e = std::polar(1.0, g.phi);
    const int mu = g.control.value;
    const int hi = mu * d + g.level_hi;
    const int lo = mu * d + g.level_lo;
    m(hi, hi) = c;
    m(hi, lo) = -s;
    m(lo, hi) = e * s;
    m(lo, lo) = e * c;
    return m;
  };
  return shift_matrix(dec.post) * givens_matrix(dec.rotation) *
         shift_matrix(dec.pre);
}

ControlSchedule control_schedule(const GrayCode& code) {
  const std::vector<GrayStep> steps = gray_steps(code);
  const int n = code.spec.n;

  // untouched[r - 1]: position r still holds its initial nonzero digit.
  std::vector<char> untouched(n, 0);
  for (int r = 1; r <= n; ++r) untouched[r - 1] = code.entries[0][r - 1] != 0;

  ControlSchedule schedule;
  schedule.steps.reserve(steps.size());
  for (std::size_t l = 0; l < steps.size(); ++l) {
    const GrayStep& step = steps[l];
    const Ditstring& m = code.entries[l];
    if (l > 0) {
      untouched[step.i - 1] = 0;
      untouched[step.j - 1] = 0;
    }
    ControlStepAudit audit;
    for (int r = 1; r <= n; ++r) {
      if (r == step.i || r == step.j) continue;
      audit.equal_positions.push_back(r);
      if (m[r - 1] != 0) audit.naive.push_back({r, m[r - 1]});
    }
    for (int r = 1; r <= n; ++r) {
      if (untouched[r - 1]) audit.untouched.push_back(r);
    }
    for (const Control& c : audit.naive) {
      if (!untouched[c.qudit - 1]) audit.pruned.push_back(c);
    }
    schedule.steps.push_back(std::move(audit));
  }
  return schedule;
}

Circuit assemble_circuit(const GrayCode& code, const AngleSchedule& schedule,
                         const ControlSchedule& controls,
                         const AssembleOptions& options) {
  code.spec.validate();
  if (code.entries.empty()) throw ValidationError("code has no entries");
  const std::size_t step_count = code.entries.size() - 1;
  if (schedule.thetas.size() != step_count ||
      schedule.phis.size() != step_count) {
    throw ValidationError("angle schedule length does not match code");
  }
  if (controls.steps.size() != step_count) {
    throw ValidationError("control schedule length does not match code");
  }

  Circuit circuit{code.spec.n, code.spec.d(), {}};
  for (int r = 1; r <= code.spec.n; ++r) {
    const int power = code.entries[0][r - 1];
    if (power != 0) circuit.gates.push_back(XPowerGate{r, power});
  }
  const std::vector<GrayStep> steps = gray_steps(code);
  for (std::size_t l = 0; l < step_count; ++l) {
    GrayGate gate{steps[l].i, steps[l].j, steps[l].m_i, steps[l].m_j,
                  schedule.thetas[l], schedule.phis[l],
                  controls.steps[l].pruned};
    if (options.elide_identity && gate.theta == 0.0 && gate.phi == 0.0) {
      continue;
    }
    circuit.gates.push_back(std::move(gate));
  }
  return circuit;
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["n"] = circuit.n;
  j["d"] = circuit.d;
  j["gates"] = nlohmann::json::array();
  for (const Gate& gate : circuit.gates) {
    nlohmann::json g;
    if (const auto* x = std::get_if<XPowerGate>(&gate)) {
      g["kind"] = "x";
      g["target"] = x->target;
      g["power"] = x->power;
    } else {
      const auto& gray = std::get<GrayGate>(gate);
      g["kind"] = "gray";
      g["i"] = gray.i;
      g["j"] = gray.j;
      g["m_i"] = gray.m_i;
      g["m_j"] = gray.m_j;
      g["theta"] = gray.theta;
      g["phi"] = gray.phi;
      auto controls = nlohmann::json::array();
      for (const Control& c : gray.controls) {
        controls.push_back({c.qudit, c.value});
      }
      g["controls"] = std::move(controls);
    }
    j["gates"].push_back(std::move(g));
  }
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit circuit;
  try {
    circuit.n = j.at("n").get<int>();
    circuit.d = j.at("d").get<int>();
    for (const nlohmann::json& g : j.at("gates")) {
      const std::string kind = g.at("kind").get<std::string>();
      if (kind == "x") {
        circuit.gates.push_back(XPowerGate{g.at("target").get<int>(),
                                           g.at("power").get<int>()});
      } else if (kind == "gray") {
        GrayGate gate{g.at("i").get<int>(),     g.at("j").get<int>(),
                      g.at("m_i").get<int>(),   g.at("m_j").get<int>(),
                      g.at("theta").get<double>(), g.at("phi").get<double>(),
                      {}};
        for (const nlohmann::json& c : g.at("controls")) {
          if (!c.is_array() || c.size() != 2) {
            throw IoError("control must be [qudit, value]");
          }
          gate.controls.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        circuit.gates.push_back(std::move(gate));
      } else {
        throw IoError("unknown gate kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad circuit JSON: ") + e.what());
  }
  if (circuit.n < 1 || circuit.d < 2) {
    throw ValidationError("circuit needs n >= 1 and d >= 2");
  }
  return circuit;
}

}  // namespace graystate
