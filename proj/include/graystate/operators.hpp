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
 * Spin operators and chain Hamiltonians for checking prepared states.
 *
 * Qudit level mu encodes the weight S^z = s - mu of a spin s = two_s / 2,
 * so |0> is the highest-weight level and a digit sum k fixes total
 * magnetization M = s n - k.  Operators are kept as sums of one- and
 * two-site terms and applied matrix-free, so residual checks reach every
 * state the simulator can hold.
 */

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "graystate/errors.hpp"
#include "graystate/simulator.hpp"

namespace graystate {

/// Exact rational coefficient, as num / den with den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / den; }
  bool operator==(const Rational&) const = default;
};

/// Spin matrices in the level basis: sz = diag(s - mu), sp |mu> raises the
/// weight (lowers mu) with <mu-1| sp |mu> = sqrt(mu (two_s - mu + 1)),
/// sm = sp^T.  sx, sy are the Hermitian combinations.
struct SpinMatrices {
  Eigen::MatrixXcd sz;
  Eigen::MatrixXcd sp;
  Eigen::MatrixXcd sm;
  Eigen::MatrixXcd sx;
  Eigen::MatrixXcd sy;
};

SpinMatrices spin_matrices(int two_s);

/// Heisenberg coupling S_1 . S_2 on d^2 = (two_s + 1)^2 levels, with the
/// left factor on the higher-significance digit.
Eigen::MatrixXcd two_site_coupling(int two_s);

/**
 * Coefficients c_0 .. c_{two_s} of the polynomial h(x, s) with
 * h(S_i . S_{i+1}, s) the integrable spin-s chain bond.  h interpolates
 * h(x_l) = 2 sum_{j=1}^{l} 1/j at the coupling eigenvalues
 * x_l = [l (l + 1) - 2 s (s + 1)] / 2, shifted so that h(s^2, s) = 0.
 * Exact rational arithmetic throughout.
 */
std::vector<Rational> h_poly(int two_s);

/// h_poly evaluated as doubles, constant term first.
std::vector<double> h_poly_coefficients(int two_s);

/// One operator term: a dense matrix on 1 or 2 sites (site indices 1-based,
/// matrix index of |mu>_a |nu>_b with sites (a, b) is mu * d + nu).
struct OperatorTerm {
  std::vector<int> sites;
  Eigen::MatrixXcd matrix;
};

/// scalar * identity + sum of terms, on n qudits of d levels.
struct OperatorSum {
  int n = 0;
  int d = 0;
  double scalar = 0.0;
  std::vector<OperatorTerm> terms;
};

/// Periodic integrable spin chain: sum over bonds (i, i+1), site n + 1
/// meaning site 1, of h(S_i . S_{i+1}).  For n = 2 both periodic bonds are
/// kept, duplicating the coupling.
OperatorSum xxx_hamiltonian(int n, int two_s, bool periodic = true);

/// Periodic spin-1 chain of projectors onto bond spin 2:
/// sum_i [ (1/2) C + (1/6) C^2 + 1/3 ] with C = S_i . S_{i+1}.
/// Annihilates its ground state, so residuals need no energy shift.
OperatorSum aklt_hamiltonian(int n);

/// Total magnetization sum_i S_i^z.
OperatorSum total_sz(int n, int two_s);

/// Total spin squared |sum_i S_i|^2 = n s (s + 1) + 2 sum_{i<j} S_i . S_j.
OperatorSum total_s2(int n, int two_s);

/// Matrix-free product op |psi>.
StateVector apply_operator(const OperatorSum& op, const StateVector& psi);

/// Dense d^n x d^n matrix of the operator.  Throws CapExceededError when
/// d^n exceeds max_dim.
Eigen::MatrixXcd operator_dense(const OperatorSum& op,
                                std::uint64_t max_dim = 4096);

/// <psi| op |psi> / <psi|psi>, real part.
double expectation(const OperatorSum& op, const StateVector& psi);

/// || (op - energy) |psi> || / || |psi> ||.
double eigenstate_residual(const OperatorSum& op, const StateVector& psi,
                           double energy);

}  // namespace graystate
