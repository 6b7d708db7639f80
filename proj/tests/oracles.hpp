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

// Test-only reference implementations, kept deliberately independent of the
// library code paths they check.

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "graystate/compositions.hpp"
#include "graystate/operators.hpp"
#include "graystate/simulator.hpp"
#include "graystate/states.hpp"

namespace oracle {

using graystate::Complex;

/// Scans every one of the d^n ditstrings and keeps those with digit sum k,
/// sorted in displayed order m_n ... m_1.
std::vector<graystate::Ditstring> brute_force_sector(
    const graystate::CompositionSpec& spec);

/// Dense normalized state with amplitudes[l] at the basis index of
/// code.entries[l].
graystate::StateVector embed_along_code(const graystate::GrayCode& code,
                                        const std::vector<Complex>& amps);

std::vector<double> random_real_unit(std::size_t dim, std::mt19937_64& rng);
std::vector<Complex> random_complex_unit(std::size_t dim,
                                         std::mt19937_64& rng);

/// Eigenvalues of the dense operator, ascending.
Eigen::VectorXd spectrum_of(const graystate::OperatorSum& op);

/// Operator scaled by a constant.
graystate::OperatorSum scaled(const graystate::OperatorSum& op, double factor);

/// Two-magnon rapidity pairs found by Newton iteration on the polynomial
/// form of the periodicity conditions, seeded from a coarse grid of real
/// and conjugate pairs.  Returned pairs satisfy the library residual check
/// to 1e-10 and are deduplicated as unordered pairs.
std::vector<graystate::BetheRoots> two_magnon_roots(int n, int two_s);

}  // namespace oracle
