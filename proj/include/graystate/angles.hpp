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
 * Rotation angles that realize a target amplitude list along a Gray code.
 *
 * Entry l of the code receives amplitude a_l.  A schedule of D - 1 angle
 * pairs reconstructs
 *
 *   a_l = (prod_{j<l} e^{i phi_j} sin theta_j) cos theta_l   for l <= D - 2,
 *   a_{D-1} = prod_{j<D-1} e^{i phi_j} sin theta_j,
 *
 * so each pair peels one amplitude off the front of the remaining tail.
 */

#include <complex>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "graystate/errors.hpp"

namespace graystate {

using Complex = std::complex<double>;

/// Angle pairs (theta_l, phi_l), l = 0 .. D - 2, together with the global
/// factor a list was multiplied by before angle extraction.  rescale is 1 for
/// real input; for complex input it is |a_p| / a_p with p the first nonzero
/// amplitude, so the reconstruction reproduces rescale * a.  rescale_pivot
/// records p, flagging lists whose leading amplitude vanished.
struct AngleSchedule {
  std::vector<double> thetas;
  std::vector<double> phis;
  Complex rescale = 1.0;
  std::size_t rescale_pivot = 0;
};

struct AngleOptions {
  /// Permitted deviation of sum |a_l|^2 from 1.
  double norm_tolerance = 1e-9;
  /// Rescale the input to unit norm instead of rejecting it.
  bool auto_normalize = false;
};

/**
 * Angles for a real amplitude list.  With tail sums Q_l^2 = sum_{j>l} a_j^2,
 *
 *   theta_l = atan2(Q_l, a_l)          for l <= D - 3,
 *   theta_{D-2} = atan2(a_{D-1}, a_{D-2}),
 *
 * all phi_l = 0.  A vanishing tail yields theta_l = 0, so trailing zero
 * amplitudes cost identity rotations.  Signs of intermediate amplitudes are
 * absorbed by theta_l > pi/2; only theta_{D-2} sees the sign of a_{D-1}.
 *
 * Throws ValidationError when the list is empty or off unit norm beyond
 * options.norm_tolerance (unless auto_normalize).
 */
AngleSchedule angles_real(std::span<const double> amplitudes,
                          const AngleOptions& options = {});

/**
 * Angles for a complex amplitude list.  The list is first multiplied by
 * rescale = |a_p| / a_p (p = first nonzero entry), making entry p real
 * positive; theta_l then follow angles_real applied to the moduli, and
 * phi_l = arg(a_{l+1}) - sum_{j<l} phi_j wrapped to (-pi, pi], with
 * phi_l = 0 whenever a_{l+1} = 0.  The running-sum form stays finite when
 * amplitudes vanish and reduces to arg(a_{l+1} / a_l) when none do.
 */
AngleSchedule angles_complex(std::span<const Complex> amplitudes,
                             const AngleOptions& options = {});

/// Evaluates the reconstruction above.  dimension must equal
/// schedule.thetas.size() + 1.  Output has unit norm by construction.
std::vector<Complex> reconstruct_amplitudes(const AngleSchedule& schedule,
                                            std::size_t dimension);

/// JSON form: {"thetas": [...], "phis": [...], "rescale": [re, im]}, plus
/// "rescale_pivot" when it is nonzero.
nlohmann::json angle_schedule_to_json(const AngleSchedule& schedule);
AngleSchedule angle_schedule_from_json(const nlohmann::json& j);

}  // namespace graystate
