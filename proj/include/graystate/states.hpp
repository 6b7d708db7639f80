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
 * Amplitude providers: physical states whose support is one digit-sum
 * sector.  Each provider returns amplitudes ordered along a given Gray
 * code, normalized, ready for angle extraction.
 *
 * Weight convention: level mu of a spin-s qudit carries S^z = s - mu, so a
 * sector of digit sum k holds total magnetization M = s n - k.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "graystate/compositions.hpp"
#include "graystate/errors.hpp"

namespace graystate {

using Complex = std::complex<double>;

/// Magnon count cap for the coordinate-sum evaluation (k! permutations).
inline constexpr int kMaxBetheMagnons = 9;

/// Translation-invariant matrix product trace tr(A^{m_n} ... A^{m_1}) of the
/// spin-1 valence bond solid, with bond matrices
///   A^0 = [[0, 1], [0, 0]],  A^1 = diag(-1, 1)/sqrt(2),  A^2 = [[0, 0], [-1, 0]].
Complex aklt_trace(const Ditstring& m);

/// Ground state of the periodic spin-1 projector chain on n >= 3 sites,
/// restricted to its digit-sum sector k = n (two_s = 2, magnetization 0).
/// code.spec must match; entries follow the code order.
std::vector<Complex> aklt_amplitudes(const GrayCode& code);

/// Symmetric (permutation-invariant) state of n spins s with k lowering
/// steps from the highest-weight product state:
///   a_m = sqrt( prod_j C(two_s, m_j) / C(two_s n, k) ).
std::vector<Complex> dicke_amplitudes(const GrayCode& code);

/// Rapidities of one magnon sector of the periodic integrable spin chain.
struct BetheRoots {
  int n = 0;
  int k = 0;
  int two_s = 0;
  std::vector<Complex> u;

  double s() const { return two_s / 2.0; }
  void validate() const;
};

/// Phase factor per root: z_j = (u_j + i s) / (u_j - i s) = e^{i p_j}.
std::vector<Complex> bethe_phase_factors(const BetheRoots& roots);

/// Momenta p_j = -i log z_j on the principal branch.
std::vector<Complex> bethe_momenta(const BetheRoots& roots);

/// Per-root deviation |z_j^n - prod_{l != j} (u_j - u_l + i)/(u_j - u_l - i)|.
/// A singular pair difference u_j - u_l = +-i reports infinity for j.
std::vector<double> bethe_residuals(const BetheRoots& roots);

/// Energy sum_j -two_s / (u_j^2 + s^2), complex before symmetrization.
Complex bethe_energy_sum(const BetheRoots& roots);

/// Real part of bethe_energy_sum; the imaginary part vanishes for
/// conjugation-symmetric root sets.
double bethe_energy(const BetheRoots& roots);

/// Closed-form one-magnon rapidity u = s cot(pi q / n), momentum 2 pi q / n.
BetheRoots bethe_one_magnon(int n, int two_s, int q);

/**
 * Coordinate wavefunction summed over magnon permutations: for strictly
 * increasing positions x_1 < ... < x_k,
 *
 *   a(x) = sum_P A_P prod_j z_{P_j}^{x_j},
 *   A_P = prod_{j<l} [ 1 - (1/two_s)(z_{P_j} - 1)(z_{P_l} - 1)
 *                       / (z_{P_j} - z_{P_l}) ],
 *
 * and a ditstring with digits m_r (m_r magnons at site r) receives
 * a(x) sqrt( prod_r C(two_s, m_r) ).  Entries follow the code order and are
 * normalized at the end.  Throws CapExceededError for k > kMaxBetheMagnons
 * and ValidationError on coincident phase factors.
 */
std::vector<Complex> bethe_amplitudes(const GrayCode& code,
                                      const BetheRoots& roots);

/// JSON form: {"n", "k", "s_times_2", "u": [[re, im], ...]}.
nlohmann::json bethe_roots_to_json(const BetheRoots& roots);
BetheRoots bethe_roots_from_json(const nlohmann::json& j);

/// One externally supplied amplitude.
struct AmplitudeEntry {
  Ditstring m;
  Complex value;
};

/// Parses a JSON array of {"m": [m_1, ..., m_n], "re", "im"} records
/// ("im" defaults to 0).
std::vector<AmplitudeEntry> amplitude_entries_from_json(
    const nlohmann::json& j);

/// Reorders entries along the code.  Every code entry must appear exactly
/// once and no entry may lie outside the sector.
std::vector<Complex> order_along_code(const std::vector<AmplitudeEntry>& list,
                                      const GrayCode& code);

}  // namespace graystate
