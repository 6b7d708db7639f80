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
 * Qudit circuits built from Gray-step rotations.
 *
 * A Gray gate acts on the two-dimensional subspace spanned by the ordered
 * pair |m_i>_i |m_j>_j, |m_i + 1>_i |m_j - 1>_j of qudits i and j, where it
 * applies
 *
 *   [ cos t            -sin t          ]
 *   [ e^{ip} sin t      e^{ip} cos t   ]
 *
 * and leaves the orthogonal complement fixed.  One gate per Gray step, with
 * the step's (i, j, m_i, m_j), moves amplitude from each code entry to its
 * successor.  X-power gates prepare the first entry from |0...0>.
 */

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "graystate/angles.hpp"
#include "graystate/compositions.hpp"
#include "graystate/errors.hpp"

namespace graystate {

/// A control condition: act only where qudit `qudit` holds `value`.
struct Control {
  int qudit = 0;
  int value = 0;

  bool operator==(const Control&) const = default;
};

/// |m> -> |m + power mod d> on one qudit.
struct XPowerGate {
  int target = 0;
  int power = 1;

  bool operator==(const XPowerGate&) const = default;
};

/// Two-qudit Gray-step rotation, optionally multi-controlled.
struct GrayGate {
  int i = 0;
  int j = 0;
  int m_i = 0;
  int m_j = 0;
  double theta = 0.0;
  double phi = 0.0;
  std::vector<Control> controls;

  bool operator==(const GrayGate&) const = default;
};

using Gate = std::variant<XPowerGate, GrayGate>;

struct Circuit {
  int n = 0;
  int d = 0;
  std::vector<Gate> gates;
};

/// Dense d^2 x d^2 matrix of an uncontrolled Gray gate; row/column index of
/// |mu>_i |nu>_j is mu * d + nu.  Throws ValidationError when the levels
/// leave the qudit range (m_i > d - 2 or m_j < 1).
Eigen::MatrixXcd gray_gate_matrix(const GrayGate& gate, int d);

/// Elementary factors of a Gray gate: a shift on i controlled on j, a
/// two-level rotation on j controlled on i, and the inverse shift.
struct ControlledShift {
  int target = 0;
  Control control;
  int step = 1;  // +1 or -1 modular shift of the target.
};

struct ControlledGivens {
  int target = 0;
  Control control;
  int level_hi = 0;  // receives cos t / -sin t row.
  int level_lo = 0;  // receives e^{ip} sin t / e^{ip} cos t row.
  double theta = 0.0;
  double phi = 0.0;
};

struct GrayGateDecomposition {
  ControlledShift pre;
  ControlledGivens rotation;
  ControlledShift post;
};

/**
 * Exact three-gate factorization of an uncontrolled Gray gate:
 * shift i up by one where j = m_j, rotate j between m_j and m_j - 1 where
 * i = m_i + 1, shift i back down where j = m_j.  The product reproduces
 * gray_gate_matrix to machine precision.
 */
GrayGateDecomposition gray_gate_decomposition(const GrayGate& gate, int d);

/// Dense d^2 x d^2 product of the three factors, for checking against
/// gray_gate_matrix.
Eigen::MatrixXcd decomposition_matrix(const GrayGateDecomposition& dec, int d);

/// Control audit of one Gray step.  naive lists controls on every position
/// untouched by the step that holds a nonzero digit; pruned is naive minus
/// positions whose digit has never moved since the first code entry (their
/// value is implied by the pipeline history, so conditioning on them is
/// redundant).
struct ControlStepAudit {
  std::vector<int> equal_positions;     // positions r not in {i, j}
  std::vector<Control> naive;           // nonzero digits among those
  std::vector<int> untouched;           // never-moved positions before pruning
  std::vector<Control> pruned;          // controls actually emitted
};

struct ControlSchedule {
  std::vector<ControlStepAudit> steps;
};

/**
 * Pruned control sets for every step of a code.  A position leaves the
 * untouched set the first time a step raises or lowers it; while a nonzero
 * position is untouched, its digit still holds the initial value m^{(0)}_r,
 * which the earlier gates of the pipeline never disturbed, so the rotation
 * it would guard is already confined to the right subspace.
 */
ControlSchedule control_schedule(const GrayCode& code);

struct AssembleOptions {
  /// Drop Gray gates whose theta and phi are both exactly zero.
  bool elide_identity = false;
};

/**
 * Full preparation circuit for a code and its angle schedule: X-power gates
 * raising |0...0> to the first code entry, then one Gray gate per step with
 * the pruned controls.  schedule and controls must both have one entry per
 * step.  Gate count is at most (entries - 1) Gray gates plus at most n
 * X-power gates.
 */
Circuit assemble_circuit(const GrayCode& code, const AngleSchedule& schedule,
                         const ControlSchedule& controls,
                         const AssembleOptions& options = {});

/// JSON form with header {"n", "d"} and one record per gate:
///   {"kind": "x", "target", "power"}
///   {"kind": "gray", "i", "j", "m_i", "m_j", "theta", "phi",
///    "controls": [[qudit, value], ...]}
/// Doubles survive a dump/parse cycle bit-exactly.
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace graystate
