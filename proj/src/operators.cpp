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

#include "graystate/operators.hpp"

#include <boost/rational.hpp>

#include <cmath>
#include <string>

namespace graystate {

namespace {

using Rat = boost::rational<long long>;
using RatPoly = std::vector<Rat>;  // coefficient l multiplies x^l

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  RatPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// h(C) for the bond coupling matrix C, by Horner's rule.
Eigen::MatrixXcd poly_of_matrix(const std::vector<double>& coeffs,
                                const Eigen::MatrixXcd& c) {
  const Eigen::Index dim = c.rows();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * c;
    acc += coeffs[i] * Eigen::MatrixXcd::Identity(dim, dim);
  }
  return acc;
}

void check_sites(int n, int two_s) {
  if (n < 1) throw InvalidSpecError("n must be at least 1");
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
}

OperatorSum bond_chain(int n, int d, const Eigen::MatrixXcd& bond,
                       bool periodic) {
  OperatorSum op{n, d, 0.0, {}};
  for (int i = 1; i < n; ++i) {
    op.terms.push_back({{i, i + 1}, bond});
  }
  if (periodic && n >= 2) {
    op.terms.push_back({{n, 1}, bond});
  }
  return op;
}

void apply_term(const OperatorTerm& term, const StateVector& in,
                StateVector& out) {
  const int d = in.d;
  const int n = in.n;
  std::vector<std::uint64_t> stride(n + 1, 0);
  stride[1] = 1;
  for (int r = 2; r <= n; ++r) stride[r] = stride[r - 1] * d;

  if (term.sites.size() == 1) {
    const int site = term.sites[0];
    const std::uint64_t s = stride[site];
    const std::uint64_t block = s * d;
    for (std::uint64_t base = 0; base < in.size(); base += block) {
      for (std::uint64_t low = 0; low < s; ++low) {
        const std::uint64_t at = base + low;
        for (int row = 0; row < d; ++row) {
          Complex acc = 0.0;
          for (int col = 0; col < d; ++col) {
            acc += term.matrix(row, col) * in.amps[at + col * s];
          }
          out.amps[at + row * s] += acc;
        }
      }
    }
    return;
  }

  // Two-site term: odometer over the other digits, matrix index mu * d + nu
  // for |mu>_a |nu>_b with sites (a, b).
  const int a = term.sites[0];
  const int b = term.sites[1];
  const std::uint64_t sa = stride[a];
  const std::uint64_t sb = stride[b];
  std::vector<std::uint64_t> free_strides;
  for (int r = 1; r <= n; ++r) {
    if (r != a && r != b) free_strides.push_back(stride[r]);
  }
  std::vector<int> odo(free_strides.size(), 0);
  std::uint64_t at = 0;
  std::vector<Complex> gathered(static_cast<std::size_t>(d) * d);
  while (true) {
    for (int mu = 0; mu < d; ++mu) {
      for (int nu = 0; nu < d; ++nu) {
        gathered[static_cast<std::size_t>(mu) * d + nu] =
            in.amps[at + mu * sa + nu * sb];
      }
    }
    for (int row = 0; row < d * d; ++row) {
      Complex acc = 0.0;
      for (int col = 0; col < d * d; ++col) {
        acc += term.matrix(row, col) * gathered[col];
      }
      const int mu = row / d;
      const int nu = row % d;
      out.amps[at + mu * sa + nu * sb] += acc;
    }

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

SpinMatrices spin_matrices(int two_s) {
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
  const int d = two_s + 1;
  const double s = two_s / 2.0;
  SpinMatrices m;
  m.sz = Eigen::MatrixXcd::Zero(d, d);
  m.sp = Eigen::MatrixXcd::Zero(d, d);
  for (int mu = 0; mu < d; ++mu) m.sz(mu, mu) = s - mu;
  for (int mu = 1; mu < d; ++mu) {
    m.sp(mu - 1, mu) = std::sqrt(static_cast<double>(mu) * (two_s - mu + 1));
  }
  m.sm = m.sp.adjoint();
  m.sx = 0.5 * (m.sp + m.sm);
  m.sy = Complex(0.0, -0.5) * (m.sp - m.sm);
  return m;
}

Eigen::MatrixXcd two_site_coupling(int two_s) {
  const SpinMatrices m = spin_matrices(two_s);
  return kron(m.sx, m.sx) + kron(m.sy, m.sy) + kron(m.sz, m.sz);
}

std::vector<Rational> h_poly(int two_s) {
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
  const int t = two_s;
  // Coupling eigenvalue on bond spin l, times 4 to stay integral.
  std::vector<Rat> nodes(t + 1);
  for (int l = 0; l <= t; ++l) {
    nodes[l] = Rat(2LL * l * (l + 1) - static_cast<long long>(t) * (t + 2), 4);
  }
  std::vector<Rat> values(t + 1, Rat(0));
  for (int l = 1; l <= t; ++l) {
    values[l] = values[l - 1] + Rat(2, l);
  }

  RatPoly acc(t + 1, Rat(0));
  for (int i = 0; i <= t; ++i) {
    RatPoly numer{Rat(1)};
    Rat denom(1);
    for (int l = 0; l <= t; ++l) {
      if (l == i) continue;
      numer = poly_mul(numer, RatPoly{-nodes[l], Rat(1)});
      denom *= nodes[i] - nodes[l];
    }
    const Rat weight = values[i] / denom;
    for (std::size_t c = 0; c < numer.size(); ++c) {
      acc[c] += weight * numer[c];
    }
  }

  // Fix the constant so the ferromagnetic coupling value x = s^2 maps to 0.
  const Rat at_s2 = poly_eval(acc, Rat(static_cast<long long>(t) * t, 4));
  acc[0] -= at_s2;

  std::vector<Rational> out(acc.size());
  for (std::size_t c = 0; c < acc.size(); ++c) {
    out[c] = {acc[c].numerator(), acc[c].denominator()};
  }
  return out;
}

std::vector<double> h_poly_coefficients(int two_s) {
  const std::vector<Rational> exact = h_poly(two_s);
  std::vector<double> out(exact.size());
  for (std::size_t c = 0; c < exact.size(); ++c) out[c] = exact[c].value();
  return out;
}

OperatorSum xxx_hamiltonian(int n, int two_s, bool periodic) {
  check_sites(n, two_s);
  if (n < 2) throw InvalidSpecError("chain needs at least two sites");
  const Eigen::MatrixXcd bond =
      poly_of_matrix(h_poly_coefficients(two_s), two_site_coupling(two_s));
  return bond_chain(n, two_s + 1, bond, periodic);
}

OperatorSum aklt_hamiltonian(int n) {
  if (n < 2) throw InvalidSpecError("chain needs at least two sites");
  const Eigen::MatrixXcd c = two_site_coupling(2);
  const Eigen::Index dim = c.rows();
  const Eigen::MatrixXcd bond =
      0.5 * c + (1.0 / 6.0) * (c * c).eval() +
      (1.0 / 3.0) * Eigen::MatrixXcd::Identity(dim, dim);
  return bond_chain(n, 3, bond, true);
}

OperatorSum total_sz(int n, int two_s) {
  check_sites(n, two_s);
  const SpinMatrices m = spin_matrices(two_s);
  OperatorSum op{n, two_s + 1, 0.0, {}};
  for (int i = 1; i <= n; ++i) op.terms.push_back({{i}, m.sz});
  return op;
}

OperatorSum total_s2(int n, int two_s) {
  check_sites(n, two_s);
  const double s = two_s / 2.0;
  const Eigen::MatrixXcd coupling = two_site_coupling(two_s);
  OperatorSum op{n, two_s + 1, n * s * (s + 1), {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      op.terms.push_back({{i, j}, 2.0 * coupling});
    }
  }
  return op;
}

StateVector apply_operator(const OperatorSum& op, const StateVector& psi) {
  if (op.n != psi.n || op.d != psi.d) {
    throw ValidationError("operator and state have different shapes");
  }
  StateVector out{psi.n, psi.d, std::vector<Complex>(psi.size(), 0.0)};
  if (op.scalar != 0.0) {
    for (std::uint64_t t = 0; t < psi.size(); ++t) {
      out.amps[t] = op.scalar * psi.amps[t];
    }
  }
  for (const OperatorTerm& term : op.terms) {
    if (term.sites.empty() || term.sites.size() > 2) {
      throw ValidationError("operator terms must cover 1 or 2 sites");
    }
    for (int site : term.sites) {
      if (site < 1 || site > op.n) {
        throw ValidationError("term site out of range");
      }
    }
    const Eigen::Index want =
        term.sites.size() == 1 ? op.d : static_cast<Eigen::Index>(op.d) * op.d;
    if (term.matrix.rows() != want || term.matrix.cols() != want) {
      throw ValidationError("term matrix has wrong shape");
    }
    if (term.sites.size() == 2 && term.sites[0] == term.sites[1]) {
      throw ValidationError("two-site term repeats a site");
    }
    apply_term(term, psi, out);
  }
  return out;
}

Eigen::MatrixXcd operator_dense(const OperatorSum& op, std::uint64_t max_dim) {
  std::uint64_t dim = 1;
  for (int r = 0; r < op.n; ++r) {
    if (dim > max_dim / static_cast<std::uint64_t>(op.d)) {
      throw CapExceededError("dense operator dimension exceeds cap " +
                             std::to_string(max_dim));
    }
    dim *= static_cast<std::uint64_t>(op.d);
  }
  const auto size = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd h(size, size);
  StateVector basis{op.n, op.d, std::vector<Complex>(dim, 0.0)};
  for (std::uint64_t col = 0; col < dim; ++col) {
    basis.amps.assign(dim, 0.0);
    basis.amps[col] = 1.0;
    const StateVector image = apply_operator(op, basis);
    for (std::uint64_t row = 0; row < dim; ++row) {
      h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          image.amps[row];
    }
  }
  return h;
}

double expectation(const OperatorSum& op, const StateVector& psi) {
  const StateVector image = apply_operator(op, psi);
  Complex overlap = 0.0;
  double norm_sq = 0.0;
  for (std::uint64_t t = 0; t < psi.size(); ++t) {
    overlap += std::conj(psi.amps[t]) * image.amps[t];
    norm_sq += std::norm(psi.amps[t]);
  }
  if (norm_sq == 0.0) throw ValidationError("state has zero norm");
  return overlap.real() / norm_sq;
}

double eigenstate_residual(const OperatorSum& op, const StateVector& psi,
                           double energy) {
  const StateVector image = apply_operator(op, psi);
  double res_sq = 0.0;
  double norm_sq = 0.0;
  for (std::uint64_t t = 0; t < psi.size(); ++t) {
    res_sq += std::norm(image.amps[t] - energy * psi.amps[t]);
    norm_sq += std::norm(psi.amps[t]);
  }
  if (norm_sq == 0.0) throw ValidationError("state has zero norm");
  return std::sqrt(res_sq / norm_sq);
}

}  // namespace graystate
