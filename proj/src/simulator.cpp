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

#include "graystate/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace graystate {

namespace {

std::uint64_t checked_power(int d, int n, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > cap / static_cast<std::uint64_t>(d)) {
      throw CapExceededError("statevector of d^n entries exceeds cap " +
                             std::to_string(cap));
    }
    size *= static_cast<std::uint64_t>(d);
  }
  return size;
}

void check_target(const StateVector& state, int target) {
  if (target < 1 || target > state.n) {
    throw ValidationError("gate target out of range");
  }
}

void apply_x_power(StateVector& state, const XPowerGate& gate) {
  check_target(state, gate.target);
  const int d = state.d;
  const int power = ((gate.power % d) + d) % d;
  if (power == 0) return;
  std::uint64_t stride = 1;
  for (int r = 1; r < gate.target; ++r) stride *= d;
  const std::uint64_t block = stride * d;
  std::vector<Complex> cycle(d);
  for (std::uint64_t base = 0; base < state.size(); base += block) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      const std::uint64_t at = base + low;
      for (int t = 0; t < d; ++t) {
        cycle[(t + power) % d] = state.amps[at + t * stride];
      }
      for (int t = 0; t < d; ++t) state.amps[at + t * stride] = cycle[t];
    }
  }
}

void apply_gray(StateVector& state, const GrayGate& gate) {
  const int d = state.d;
  const int n = state.n;
  check_target(state, gate.i);
  check_target(state, gate.j);
  if (gate.i == gate.j) throw ValidationError("gate qudits must differ");
  if (gate.m_i < 0 || gate.m_i > d - 2 || gate.m_j < 1 || gate.m_j > d - 1) {
    throw ValidationError("gate levels out of range");
  }

  std::vector<std::uint64_t> stride(n + 1, 0);
  stride[1] = 1;
  for (int r = 2; r <= n; ++r) stride[r] = stride[r - 1] * d;

  std::vector<char> fixed(n + 1, 0);
  fixed[gate.i] = fixed[gate.j] = 1;
  std::uint64_t base = static_cast<std::uint64_t>(gate.m_i) * stride[gate.i] +
                       static_cast<std::uint64_t>(gate.m_j) * stride[gate.j];
  for (const Control& c : gate.controls) {
    check_target(state, c.qudit);
    if (fixed[c.qudit]) {
      throw ValidationError("control repeats a qudit of the gate");
    }
    if (c.value < 0 || c.value >= d) {
      throw ValidationError("control value out of range");
    }
    fixed[c.qudit] = 1;
    base += static_cast<std::uint64_t>(c.value) * stride[c.qudit];
  }

  std::vector<std::uint64_t> free_strides;
  for (int r = 1; r <= n; ++r) {
    if (!fixed[r]) free_strides.push_back(stride[r]);
  }

  const double c = std::cos(gate.theta);
  const double s = std::sin(gate.theta);
  const Complex e = std::polar(1.0, gate.phi);
  // Partner entry raises digit i and lowers digit j.
  const std::uint64_t delta = stride[gate.i] - stride[gate.j];

  std::vector<int> odo(free_strides.size(), 0);
  std::uint64_t at = base;
  while (true) {
    const Complex a = state.amps[at];
    const Complex b = state.amps[at + delta];
    state.amps[at] = c * a - s * b;
    state.amps[at + delta] = e * (s * a + c * b);

    std::size_t t = 0;
    for (; t < odo.size(); ++t) {
      ++odo[t];
      at += free_strides[t];
      if (odo[t] < d) break;
      odo[t] = 0;
      at -= free_strides[t] * d;
    }
    if (t == odo.size()) break;
  }
}

}  // namespace

StateVector zero_state(int n, int d, std::uint64_t max_entries) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (d < 2) throw ValidationError("d must be at least 2");
  const std::uint64_t size = checked_power(d, n, max_entries);
  StateVector state{n, d, std::vector<Complex>(size, 0.0)};
  state.amps[0] = 1.0;
  return state;
}

std::uint64_t encode_index(const Ditstring& m, int d) {
  std::uint64_t index = 0;
  for (std::size_t r = m.size(); r-- > 0;) {
    if (m[r] < 0 || m[r] >= d) throw ValidationError("digit out of range");
    index = index * static_cast<std::uint64_t>(d) +
            static_cast<std::uint64_t>(m[r]);
  }
  return index;
}

Ditstring decode_index(std::uint64_t index, int n, int d) {
  Ditstring m(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    m[r] = static_cast<int>(index % static_cast<std::uint64_t>(d));
    index /= static_cast<std::uint64_t>(d);
  }
  if (index != 0) throw ValidationError("index out of range");
  return m;
}

void apply_gate(StateVector& state, const Gate& gate) {
  if (const auto* x = std::get_if<XPowerGate>(&gate)) {
    apply_x_power(state, *x);
  } else {
    apply_gray(state, std::get<GrayGate>(gate));
  }
}

StateVector run(const Circuit& circuit, std::uint64_t max_entries) {
  StateVector state = zero_state(circuit.n, circuit.d, max_entries);
  for (const Gate& gate : circuit.gates) apply_gate(state, gate);
  return state;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n || a.d != b.d) {
    throw ValidationError("states have different shapes");
  }
  Complex overlap = 0.0;
  for (std::uint64_t t = 0; t < a.size(); ++t) {
    overlap += std::conj(a.amps[t]) * b.amps[t];
  }
  return std::abs(overlap);
}

Complex amplitude_of(const StateVector& state, const Ditstring& m) {
  if (static_cast<int>(m.size()) != state.n) {
    throw ValidationError("ditstring length differs from n");
  }
  return state.amps[encode_index(m, state.d)];
}

nlohmann::json state_to_json(const StateVector& state, double threshold) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint64_t t = 0; t < state.size(); ++t) {
    if (std::abs(state.amps[t]) <= threshold) continue;
    nlohmann::json row;
    row["m"] = decode_index(t, state.n, state.d);
    row["re"] = state.amps[t].real();
    row["im"] = state.amps[t].imag();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string state_to_csv(const StateVector& state, double threshold) {
  std::ostringstream oss;
  oss << "m,re,im\n";
  oss.precision(17);
  for (std::uint64_t t = 0; t < state.size(); ++t) {
    if (std::abs(state.amps[t]) <= threshold) continue;
    const Ditstring m = decode_index(t, state.n, state.d);
    const std::string shown = display_ditstring(m, state.d - 1);
    if (shown.find(',') != std::string::npos) {
      oss << '"' << shown << '"';
    } else {
      oss << shown;
    }
    oss << ',' << state.amps[t].real() << ',' << state.amps[t].imag() << '\n';
  }
  return oss.str();
}

}  // namespace graystate
