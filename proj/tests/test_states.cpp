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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "graystate/operators.hpp"
#include "graystate/simulator.hpp"
#include "graystate/states.hpp"
#include "oracles.hpp"

using namespace graystate;

namespace {

// Rotates a ditstring one site toward higher positions.
Ditstring cycled(const Ditstring& m) {
  Ditstring out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    out[(r + 1) % m.size()] = m[r];
  return out;
}

StateVector embedded(const CompositionSpec& spec,
                     const std::vector<Complex>& amps) {
  return oracle::embed_along_code(walsh_gray_code(spec), amps);
}

}  // namespace

TEST_SUITE("valence bond solid") {
  TEST_CASE("frozen trace value") {
    CHECK(std::abs(aklt_trace({2, 1, 0}) -
                   Complex{-1.0 / std::numbers::sqrt2, 0.0}) <= 1e-15);
    CHECK(std::abs(aklt_trace({2, 0, 1}) -
                   Complex{1.0 / std::numbers::sqrt2, 0.0}) <= 1e-15);
    CHECK(std::abs(aklt_trace({1, 1, 1})) == 0.0);
  }

  TEST_CASE("trace is cyclically invariant") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> digit(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
      Ditstring m(5);
      for (int& v : m) v = digit(rng);
      CHECK(std::abs(aklt_trace(m) - aklt_trace(cycled(m))) <= 1e-14);
    }
  }

  TEST_CASE("amplitudes are annihilated by the projector chain") {
    for (int n = 3; n <= 5; ++n) {
      const CompositionSpec spec{n, n, 2};
      const GrayCode code = walsh_gray_code(spec);
      const StateVector psi =
          oracle::embed_along_code(code, aklt_amplitudes(code));
      CAPTURE(n);
      CHECK(eigenstate_residual(aklt_hamiltonian(n), psi, 0.0) <= 1e-12);
      CHECK(std::abs(expectation(total_sz(n, 2), psi)) <= 1e-12);
    }
  }

  TEST_CASE("matches the exact-diagonalization ground state") {
    const CompositionSpec spec{3, 3, 2};
    const GrayCode code = walsh_gray_code(spec);
    const StateVector psi =
        oracle::embed_along_code(code, aklt_amplitudes(code));
    const Eigen::MatrixXcd h = operator_dense(aklt_hamiltonian(3));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    CHECK(std::abs(solver.eigenvalues()(0)) <= 1e-12);
    StateVector ground{3, 3, std::vector<Complex>(27)};
    for (int b = 0; b < 27; ++b) ground.amps[b] = solver.eigenvectors()(b, 0);
    CHECK(fidelity(psi, ground) >= 1.0 - 1e-12);
  }

  TEST_CASE("sector constraints are enforced") {
    CHECK_THROWS_AS(aklt_amplitudes(walsh_gray_code({3, 3, 1})),
                    InvalidSpecError);
    CHECK_THROWS_AS(aklt_amplitudes(walsh_gray_code({3, 2, 2})),
                    InvalidSpecError);
    CHECK_THROWS_AS(aklt_amplitudes(walsh_gray_code({2, 2, 2})),
                    InvalidSpecError);
  }
}

TEST_SUITE("symmetric states") {
  TEST_CASE("spin-half amplitudes are uniform") {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= n; ++k) {
        const GrayCode code = walsh_gray_code({n, k, 1});
        const auto amps = dicke_amplitudes(code);
        const double want = 1.0 / std::sqrt(static_cast<double>(
                                binomial(static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(k))));
        for (const Complex& a : amps) CHECK(std::abs(a - want) <= 1e-12);
      }
    }
  }

  TEST_CASE("matches repeated lowering of the top state") {
    for (int two_s = 1; two_s <= 3; ++two_s) {
      for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= n * two_s; ++k) {
          const CompositionSpec spec{n, k, two_s};
          const GrayCode code = walsh_gray_code(spec);
          const auto amps = dicke_amplitudes(code);
          const StateVector psi = oracle::embed_along_code(code, amps);

          OperatorSum lower{n, two_s + 1, 0.0, {}};
          const SpinMatrices m = spin_matrices(two_s);
          for (int site = 1; site <= n; ++site)
            lower.terms.push_back({{site}, m.sm});
          StateVector ref = zero_state(n, two_s + 1);
          for (int step = 0; step < k; ++step)
            ref = apply_operator(lower, ref);
          double norm_sq = 0.0;
          for (const Complex& a : ref.amps) norm_sq += std::norm(a);
          for (Complex& a : ref.amps) a /= std::sqrt(norm_sq);

          CAPTURE(two_s);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(fidelity(psi, ref) >= 1.0 - 1e-12);
        }
      }
    }
  }

  TEST_CASE("normalization across the sweep") {
    for (int two_s = 1; two_s <= 4; ++two_s) {
      for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n * two_s; ++k) {
          const auto amps = dicke_amplitudes(walsh_gray_code({n, k, two_s}));
          double norm_sq = 0.0;
          for (const Complex& a : amps) norm_sq += std::norm(a);
          CHECK(std::abs(norm_sq - 1.0) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("lowest total-spin-squared eigenstate") {
    for (int two_s = 1; two_s <= 3; ++two_s) {
      for (int n = 2; n <= 3; ++n) {
        for (int k = 0; k <= n * two_s; ++k) {
          const CompositionSpec spec{n, k, two_s};
          const GrayCode code = walsh_gray_code(spec);
          const StateVector psi =
              oracle::embed_along_code(code, dicke_amplitudes(code));
          const double s = two_s / 2.0;
          const double energy = -(s * n) * (s * n + 1);
          const OperatorSum minus_s2 = oracle::scaled(total_s2(n, two_s), -1.0);
          CAPTURE(two_s);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(eigenstate_residual(minus_s2, psi, energy) <= 1e-9);
        }
      }
    }
  }
}

TEST_SUITE("bethe roots") {
  TEST_CASE("one-magnon closed form") {
    for (int n : {3, 4, 6}) {
      for (int two_s : {1, 2, 3}) {
        for (int q = 1; q <= n - 1; ++q) {
          const BetheRoots roots = bethe_one_magnon(n, two_s, q);
          const auto z = bethe_phase_factors(roots);
          const double angle = 2.0 * std::numbers::pi * q / n;
          CHECK(std::abs(z[0] - std::polar(1.0, angle)) <= 1e-12);

          const auto residuals = bethe_residuals(roots);
          CHECK(residuals[0] <= 1e-10);

          const double s = two_s / 2.0;
          const double want = -2.0 / s * std::pow(std::sin(angle / 2.0), 2);
          CHECK(bethe_energy(roots) == doctest::Approx(want).epsilon(1e-12));

          const auto p = bethe_momenta(roots);
          CHECK(std::abs(p[0].imag()) <= 1e-12);
          CHECK(std::abs(std::polar(1.0, p[0].real()) -
                         std::polar(1.0, angle)) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("one-magnon states are chain eigenstates") {
    for (int n : {3, 4}) {
      for (int two_s : {1, 2}) {
        for (int q = 1; q <= n - 1; ++q) {
          const CompositionSpec spec{n, 1, two_s};
          const GrayCode code = walsh_gray_code(spec);
          const BetheRoots roots = bethe_one_magnon(n, two_s, q);
          const StateVector psi =
              oracle::embed_along_code(code, bethe_amplitudes(code, roots));
          CAPTURE(n);
          CAPTURE(two_s);
          CAPTURE(q);
          CHECK(eigenstate_residual(xxx_hamiltonian(n, two_s), psi,
                                    bethe_energy(roots)) <= 1e-8);
        }
      }
    }
  }

  TEST_CASE("frozen two-magnon ground state of four spin-halves") {
    const double u = 0.5 / std::sqrt(3.0);
    const BetheRoots roots{4, 2, 1, {Complex(u, 0.0), Complex(-u, 0.0)}};
    const auto residuals = bethe_residuals(roots);
    CHECK(residuals[0] <= 1e-12);
    CHECK(residuals[1] <= 1e-12);
    CHECK(bethe_energy(roots) == doctest::Approx(-6.0).epsilon(1e-12));
    CHECK(std::abs(bethe_energy_sum(roots).imag()) <= 1e-13);

    const GrayCode code = walsh_gray_code({4, 2, 1});
    const StateVector psi =
        oracle::embed_along_code(code, bethe_amplitudes(code, roots));
    CHECK(eigenstate_residual(xxx_hamiltonian(4, 1), psi, -6.0) <= 1e-10);

    const Eigen::VectorXd spectrum = oracle::spectrum_of(xxx_hamiltonian(4, 1));
    CHECK(spectrum(0) == doctest::Approx(-6.0).epsilon(1e-12));
  }

  TEST_CASE("amplitudes are invariant under root relabeling") {
    const double u = 0.5 / std::sqrt(3.0);
    const GrayCode code = walsh_gray_code({4, 2, 1});
    const BetheRoots fwd{4, 2, 1, {Complex(u, 0.0), Complex(-u, 0.0)}};
    const BetheRoots rev{4, 2, 1, {Complex(-u, 0.0), Complex(u, 0.0)}};
    const StateVector a = oracle::embed_along_code(code, bethe_amplitudes(code, fwd));
    const StateVector b = oracle::embed_along_code(code, bethe_amplitudes(code, rev));
    CHECK(fidelity(a, b) >= 1.0 - 1e-12);
  }

  TEST_CASE("newton oracle roots solve the equations") {
    for (const auto& sector : std::vector<std::pair<int, int>>{
             {3, 2}, {4, 1}, {3, 3}}) {
      const int n = sector.first;
      const int two_s = sector.second;
      const auto sets = oracle::two_magnon_roots(n, two_s);
      CAPTURE(n);
      CAPTURE(two_s);
      CHECK(!sets.empty());
      for (const BetheRoots& roots : sets) {
        REQUIRE(roots.k == 2);
        const auto residuals = bethe_residuals(roots);
        CHECK(residuals[0] <= 1e-9);
        CHECK(residuals[1] <= 1e-9);
      }
    }
  }

  TEST_CASE("pole and singular-pair handling") {
    const BetheRoots at_pole{3, 1, 1, {Complex(0.0, 0.5)}};
    CHECK_THROWS_AS(bethe_phase_factors(at_pole), ValidationError);
    CHECK_THROWS_AS(bethe_energy(at_pole), ValidationError);

    // Roots separated by exactly i, away from the pole (two_s = 2).  The
    // first root divides by zero in its scattering factor; the second sees
    // a vanishing factor instead, leaving |z^n - 0| = (1/3)^4.
    const BetheRoots singular{4, 2, 2, {Complex(0.0, 0.5), Complex(0.0, -0.5)}};
    const auto residuals = bethe_residuals(singular);
    CHECK(std::isinf(residuals[0]));
    CHECK(residuals[1] == doctest::Approx(1.0 / 81.0).epsilon(1e-12));
  }

  TEST_CASE("coincident phase factors are rejected") {
    const GrayCode code = walsh_gray_code({4, 2, 1});
    const BetheRoots dup{4, 2, 1, {Complex(0.3, 0.0), Complex(0.3, 0.0)}};
    CHECK_THROWS_AS(bethe_amplitudes(code, dup), ValidationError);
  }

  TEST_CASE("magnon cap and k = 0") {
    const GrayCode code = walsh_gray_code({10, 10, 1});
    const BetheRoots big{10, 10, 1, std::vector<Complex>(10, Complex(1.0))};
    CHECK_THROWS_AS(bethe_amplitudes(code, big), CapExceededError);

    const GrayCode vacuum = walsh_gray_code({3, 0, 1});
    const BetheRoots none{3, 0, 1, {}};
    const auto amps = bethe_amplitudes(vacuum, none);
    REQUIRE(amps.size() == 1);
    CHECK(amps[0] == Complex{1.0, 0.0});
  }

  TEST_CASE("roots serialization round-trip") {
    const BetheRoots roots{4, 2, 3, {Complex(0.25, -1.5), Complex(-0.25, 1.5)}};
    const BetheRoots back = bethe_roots_from_json(bethe_roots_to_json(roots));
    CHECK(back.n == roots.n);
    CHECK(back.k == roots.k);
    CHECK(back.two_s == roots.two_s);
    CHECK(back.u == roots.u);
    CHECK_THROWS_AS(bethe_roots_from_json(nlohmann::json::parse("{}")),
                    IoError);
    CHECK_THROWS_AS(bethe_roots_from_json(nlohmann::json::parse(
                        R"({"n":3,"k":2,"s_times_2":1,"u":[[0.1,0.0]]})")),
                    ValidationError);
  }
}

TEST_SUITE("external amplitude lists") {
  TEST_CASE("parsing with optional imaginary parts") {
    const auto list = amplitude_entries_from_json(nlohmann::json::parse(
        R"([{"m":[1,0],"re":0.5},{"m":[0,1],"re":0.0,"im":-0.25}])"));
    REQUIRE(list.size() == 2);
    CHECK(list[0].m == Ditstring{1, 0});
    CHECK(list[0].value == Complex{0.5, 0.0});
    CHECK(list[1].value == Complex{0.0, -0.25});
    CHECK_THROWS_AS(amplitude_entries_from_json(nlohmann::json::parse("{}")),
                    IoError);
    CHECK_THROWS_AS(
        amplitude_entries_from_json(nlohmann::json::parse(R"([{"re":1.0}])")),
        IoError);
  }

  TEST_CASE("reordering along the code") {
    const GrayCode code = walsh_gray_code({3, 3, 2});
    std::mt19937_64 rng(62);
    const auto amps = oracle::random_complex_unit(code.entries.size(), rng);
    std::vector<AmplitudeEntry> list;
    for (std::size_t l = 0; l < code.entries.size(); ++l)
      list.push_back({code.entries[l], amps[l]});
    std::shuffle(list.begin(), list.end(), rng);
    const auto ordered = order_along_code(list, code);
    for (std::size_t l = 0; l < code.entries.size(); ++l) {
      const auto it = std::find_if(list.begin(), list.end(),
                                   [&](const AmplitudeEntry& e) {
                                     return e.m == code.entries[l];
                                   });
      CHECK(ordered[l] == it->value);
    }
  }

  TEST_CASE("strict coverage errors") {
    const GrayCode code = walsh_gray_code({3, 3, 2});
    std::vector<AmplitudeEntry> list;
    for (const Ditstring& m : code.entries) list.push_back({m, Complex{0.1}});

    auto duplicated = list;
    duplicated.push_back(list.front());
    CHECK_THROWS_AS(order_along_code(duplicated, code), ValidationError);

    auto missing = list;
    missing.pop_back();
    CHECK_THROWS_AS(order_along_code(missing, code), ValidationError);

    auto extra = list;
    extra.push_back({{3, 0, 0}, Complex{0.2}});
    CHECK_THROWS_AS(order_along_code(extra, code), ValidationError);
  }
}
