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

#include <cmath>
#include <random>

#include "graystate/angles.hpp"
#include "oracles.hpp"

using namespace graystate;

namespace {

double max_abs_diff(const std::vector<Complex>& a,
                    const std::vector<Complex>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l)
    worst = std::max(worst, std::abs(a[l] - b[l]));
  return worst;
}

std::vector<Complex> reconstruct_real(const std::vector<double>& a) {
  const AngleSchedule sched = angles_real(a);
  return reconstruct_amplitudes(sched, a.size());
}

}  // namespace

TEST_SUITE("real schedules") {
  TEST_CASE("two amplitudes use the closing atan2 form") {
    const std::vector<double> a = {std::cos(0.4), std::sin(0.4)};
    const AngleSchedule sched = angles_real(a);
    REQUIRE(sched.thetas.size() == 1);
    CHECK(sched.thetas[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(sched.phis == std::vector<double>{0.0});
    CHECK(sched.rescale == Complex{1.0, 0.0});
  }

  TEST_CASE("negative closing amplitudes survive the round trip") {
    const std::vector<double> a = {0.5, -0.5, std::sqrt(0.5)};
    const auto back = reconstruct_real(a);
    std::vector<Complex> target(a.begin(), a.end());
    CHECK(max_abs_diff(back, target) <= 1e-12);
  }

  TEST_CASE("zero tail pins the remaining angles to zero") {
    const std::vector<double> a = {1.0, 0.0, 0.0, 0.0};
    const AngleSchedule sched = angles_real(a);
    for (double theta : sched.thetas) CHECK(theta == 0.0);
    const auto back = reconstruct_amplitudes(sched, a.size());
    CHECK(std::abs(back[0] - 1.0) <= 1e-15);
  }

  TEST_CASE("interior zero amplitudes round-trip") {
    const std::vector<double> a = {0.0, 0.6, 0.0, -0.8};
    const auto back = reconstruct_real(a);
    std::vector<Complex> target(a.begin(), a.end());
    CHECK(max_abs_diff(back, target) <= 1e-12);
  }

  TEST_CASE("random unit vectors round-trip") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<std::size_t> pick_dim(2, 40);
      const std::size_t dim = pick_dim(rng);
      const std::vector<double> a = oracle::random_real_unit(dim, rng);
      const auto back = reconstruct_real(a);
      std::vector<Complex> target(a.begin(), a.end());
      CAPTURE(trial);
      CHECK(max_abs_diff(back, target) <= 1e-12);
    }
  }

  TEST_CASE("norm handling") {
    CHECK_THROWS_AS(angles_real(std::vector<double>{0.5, 0.5}),
                    ValidationError);
    AngleOptions opts;
    opts.auto_normalize = true;
    const AngleSchedule sched =
        angles_real(std::vector<double>{3.0, 4.0}, opts);
    const auto back = reconstruct_amplitudes(sched, 2);
    CHECK(std::abs(back[0] - 0.6) <= 1e-12);
    CHECK(std::abs(back[1] - 0.8) <= 1e-12);
    CHECK_THROWS_AS(angles_real(std::vector<double>{0.0, 0.0}, opts),
                    ValidationError);
    CHECK_THROWS_AS(angles_real(std::vector<double>{}), ValidationError);
    // A one-dimensional sector needs no rotations at all.
    const AngleSchedule trivial = angles_real(std::vector<double>{1.0});
    CHECK(trivial.thetas.empty());
    CHECK(trivial.phis.empty());
    CHECK(reconstruct_amplitudes(trivial, 1) == std::vector<Complex>{1.0});
  }
}

TEST_SUITE("complex schedules") {
  TEST_CASE("global phase rescale uses the first nonzero amplitude") {
    std::vector<Complex> a = {Complex{0.0, 0.6}, Complex{0.8, 0.0}};
    const AngleSchedule sched = angles_complex(a);
    CHECK(sched.rescale_pivot == 0);
    CHECK(std::abs(sched.rescale - Complex{0.0, -1.0}) <= 1e-12);
    const auto back = reconstruct_amplitudes(sched, 2);
    for (std::size_t l = 0; l < a.size(); ++l)
      CHECK(std::abs(back[l] - sched.rescale * a[l]) <= 1e-12);
  }

  TEST_CASE("leading zeros shift the rescale pivot and are flagged") {
    std::vector<Complex> a = {Complex{0.0, 0.0}, Complex{0.0, 0.6},
                              Complex{0.8, 0.0}};
    const AngleSchedule sched = angles_complex(a);
    CHECK(sched.rescale_pivot == 1);
    const auto back = reconstruct_amplitudes(sched, 3);
    for (std::size_t l = 0; l < a.size(); ++l)
      CHECK(std::abs(back[l] - sched.rescale * a[l]) <= 1e-12);
  }

  TEST_CASE("phases are wrapped to (-pi, pi]") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = oracle::random_complex_unit(12, rng);
      const AngleSchedule sched = angles_complex(a);
      for (double phi : sched.phis) {
        CHECK(phi > -3.14159265358979324);
        CHECK(phi <= 3.14159265358979324);
      }
    }
  }

  TEST_CASE("zero successor amplitude forces a zero phase") {
    std::vector<Complex> a = {Complex{0.6, 0.0}, Complex{0.0, 0.0},
                              Complex{0.0, 0.8}};
    const AngleSchedule sched = angles_complex(a);
    REQUIRE(sched.phis.size() == 2);
    CHECK(sched.phis[0] == 0.0);
    const auto back = reconstruct_amplitudes(sched, 3);
    for (std::size_t l = 0; l < a.size(); ++l)
      CHECK(std::abs(back[l] - sched.rescale * a[l]) <= 1e-12);
  }

  TEST_CASE("random unit vectors round-trip up to the recorded rescale") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<std::size_t> pick_dim(2, 40);
      const std::size_t dim = pick_dim(rng);
      const auto a = oracle::random_complex_unit(dim, rng);
      const AngleSchedule sched = angles_complex(a);
      const auto back = reconstruct_amplitudes(sched, dim);
      std::vector<Complex> target(dim);
      for (std::size_t l = 0; l < dim; ++l) target[l] = sched.rescale * a[l];
      CAPTURE(trial);
      CHECK(max_abs_diff(back, target) <= 1e-12);
      CHECK(std::abs(std::abs(sched.rescale) - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("real inputs reduce to the real schedule") {
    std::mt19937_64 rng(73);
    const std::vector<double> a = oracle::random_real_unit(9, rng);
    std::vector<Complex> ac(a.begin(), a.end());
    const AngleSchedule complex_sched = angles_complex(ac);
    const AngleSchedule real_sched = angles_real(a);
    REQUIRE(complex_sched.thetas.size() == real_sched.thetas.size());
    for (std::size_t l = 0; l < real_sched.thetas.size(); ++l) {
      // The complex route keeps theta in the first quadrant and pushes the
      // sign of each amplitude into a phase; the real route folds that sign
      // into cos(theta) instead.  Sines match, cosines match in magnitude.
      CHECK(std::abs(std::sin(complex_sched.thetas[l]) -
                     std::sin(real_sched.thetas[l])) <= 1e-12);
      CHECK(std::abs(std::abs(std::cos(complex_sched.thetas[l])) -
                     std::abs(std::cos(real_sched.thetas[l]))) <= 1e-12);
    }
    for (double phi : complex_sched.phis) {
      const double dist = std::min(std::abs(phi),
                                   std::abs(std::abs(phi) - std::acos(-1.0)));
      CHECK(dist <= 1e-12);
    }
  }

  TEST_CASE("norm handling") {
    CHECK_THROWS_AS(angles_complex(std::vector<Complex>{{0.5, 0.0}, {0.5, 0.0}}),
                    ValidationError);
    AngleOptions opts;
    opts.auto_normalize = true;
    const AngleSchedule sched = angles_complex(
        std::vector<Complex>{{0.0, 3.0}, {4.0, 0.0}}, opts);
    const auto back = reconstruct_amplitudes(sched, 2);
    CHECK(std::abs(back[0] - 0.6) <= 1e-12);
    CHECK(std::abs(std::abs(back[1]) - 0.8) <= 1e-12);
  }
}

TEST_SUITE("schedule serialization") {
  TEST_CASE("round-trip with a nontrivial rescale") {
    std::mt19937_64 rng(74);
    const auto a = oracle::random_complex_unit(17, rng);
    const AngleSchedule sched = angles_complex(a);
    const AngleSchedule back = angle_schedule_from_json(
        angle_schedule_to_json(sched));
    CHECK(back.thetas == sched.thetas);
    CHECK(back.phis == sched.phis);
    CHECK(back.rescale == sched.rescale);
    CHECK(back.rescale_pivot == sched.rescale_pivot);
  }

  TEST_CASE("pivot key appears only when nonzero") {
    std::vector<Complex> plain = {Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    const nlohmann::json j0 = angle_schedule_to_json(angles_complex(plain));
    CHECK(!j0.contains("rescale_pivot"));

    std::vector<Complex> shifted = {Complex{0.0, 0.0}, Complex{0.6, 0.0},
                                    Complex{0.0, 0.8}};
    const nlohmann::json j1 = angle_schedule_to_json(angles_complex(shifted));
    REQUIRE(j1.contains("rescale_pivot"));
    CHECK(j1["rescale_pivot"] == 1);
    const AngleSchedule back = angle_schedule_from_json(j1);
    CHECK(back.rescale_pivot == 1);
  }

  TEST_CASE("missing keys are rejected") {
    CHECK_THROWS_AS(angle_schedule_from_json(nlohmann::json::parse("{}")),
                    IoError);
  }
}
