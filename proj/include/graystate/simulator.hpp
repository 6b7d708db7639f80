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

#pragma once

/**
 * Dense statevector simulation of qudit circuits.
 *
 * Basis index of |m_n ... m_1> is sum_r m_r d^{r-1}: qudit 1 is the least
 * significant digit.  Gates update the vector in place; a Gray gate touches
 * only the amplitude pairs of its rotation plane, enumerated by an odometer
 * over the digits it leaves fixed, so its cost is d^{n-2-controls} pairs.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "graystate/circuit.hpp"
#include "graystate/compositions.hpp"
#include "graystate/errors.hpp"

namespace graystate {

/// Cap on d^n statevector entries, overridable per call.
inline constexpr std::uint64_t kDefaultMaxStateEntries = std::uint64_t{1}
                                                         << 26;

struct StateVector {
  int n = 0;
  int d = 0;
  std::vector<Complex> amps;

  std::uint64_t size() const { return amps.size(); }
};

/// |0...0> on n qudits of d levels.  Throws CapExceededError when d^n
/// exceeds max_entries.
StateVector zero_state(int n, int d,
                       std::uint64_t max_entries = kDefaultMaxStateEntries);

/// Basis index of a ditstring and its inverse.
std::uint64_t encode_index(const Ditstring& m, int d);
Ditstring decode_index(std::uint64_t index, int n, int d);

/// In-place application.  Throws ValidationError on out-of-range targets,
/// levels, or controls (controls must be distinct and avoid i and j).
void apply_gate(StateVector& state, const Gate& gate);

/// zero_state followed by every gate of the circuit.
StateVector run(const Circuit& circuit,
                std::uint64_t max_entries = kDefaultMaxStateEntries);

/// <a|b| absolute overlap; states must share n and d.
double fidelity(const StateVector& a, const StateVector& b);

Complex amplitude_of(const StateVector& state, const Ditstring& m);

/// JSON rows {"m": [m_1, ..., m_n], "re", "im"} for every amplitude with
/// |amp| > threshold, ascending in basis index.
nlohmann::json state_to_json(const StateVector& state,
                             double threshold = 1e-12);

/// CSV with header "m,re,im"; m rendered as the displayed ditstring.
std::string state_to_csv(const StateVector& state, double threshold = 1e-12);

}  // namespace graystate
