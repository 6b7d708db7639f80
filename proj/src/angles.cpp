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

#include "graystate/angles.hpp"

#include <cmath>
#include <numbers>

namespace graystate {

namespace {

double wrap_to_pm_pi(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x <= -std::numbers::pi) x += two_pi;
  if (x > std::numbers::pi) x -= two_pi;
  return x;
}

// Returns the squared-norm check / normalization factor, throwing per options.
double checked_inverse_norm(double norm_sq, const AngleOptions& options) {
  if (norm_sq <= 0.0) {
    throw ValidationError("amplitude list has zero norm");
  }
  if (!options.auto_normalize &&
      std::abs(norm_sq - 1.0) > options.norm_tolerance) {
    throw ValidationError("amplitude list is not normalized");
  }
  return 1.0 / std::sqrt(norm_sq);
}

// Thetas from a non-negative modulus list with unit square sum.
std::vector<double> thetas_from_moduli(const std::vector<double>& r) {
  const std::size_t dim = r.size();
  std::vector<double> thetas(dim - 1, 0.0);
  if (dim < 2) return thetas;
  // tail[l] = sum_{j>l} r_j^2, accumulated backward for accuracy.
  std::vector<double> tail(dim, 0.0);
  for (std::size_t l = dim - 1; l-- > 0;) tail[l] = tail[l + 1] + r[l + 1] * r[l + 1];
  for (std::size_t l = 0; l + 2 < dim; ++l) {
    const double q = std::sqrt(tail[l]);
    thetas[l] = (q == 0.0 && r[l] == 0.0) ? 0.0 : std::atan2(q, r[l]);
  }
  const double a = r[dim - 1];
  const double b = r[dim - 2];
  thetas[dim - 2] = (a == 0.0 && b == 0.0) ? 0.0 : std::atan2(a, b);
  return thetas;
}

}  // namespace

AngleSchedule angles_real(std::span<const double> amplitudes,
                          const AngleOptions& options) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0) throw ValidationError("empty amplitude list");
  double norm_sq = 0.0;
  for (double a : amplitudes) norm_sq += a * a;
  const double scale = checked_inverse_norm(norm_sq, options);

  std::vector<double> a(amplitudes.begin(), amplitudes.end());
  for (double& v : a) v *= scale;

  AngleSchedule schedule;
  schedule.thetas = thetas_from_moduli(a);
  schedule.phis.assign(schedule.thetas.size(), 0.0);
  return schedule;
}

AngleSchedule angles_complex(std::span<const Complex> amplitudes,
                             const AngleOptions& options) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0) throw ValidationError("empty amplitude list");
  double norm_sq = 0.0;
  for (const Complex& a : amplitudes) norm_sq += std::norm(a);
  const double scale = checked_inverse_norm(norm_sq, options);

  AngleSchedule schedule;
  std::size_t pivot = dim;
  for (std::size_t l = 0; l < dim; ++l) {
    if (std::abs(amplitudes[l]) != 0.0) {
      pivot = l;
      break;
    }
  }
  if (pivot == dim) throw ValidationError("amplitude list has zero norm");
  schedule.rescale = std::abs(amplitudes[pivot]) / amplitudes[pivot];
  schedule.rescale_pivot = pivot;

  std::vector<Complex> b(amplitudes.begin(), amplitudes.end());
  for (Complex& v : b) v *= schedule.rescale * scale;

  std::vector<double> moduli(dim, 0.0);
  for (std::size_t l = 0; l < dim; ++l) moduli[l] = std::abs(b[l]);
  schedule.thetas = thetas_from_moduli(moduli);

  schedule.phis.assign(schedule.thetas.size(), 0.0);
  double running = 0.0;  // sum of phi_j for j < l; the phase of the tail prefix.
  for (std::size_t l = 0; l + 1 < dim; ++l) {
    double phi = 0.0;
    if (moduli[l + 1] != 0.0) {
      phi = wrap_to_pm_pi(std::arg(b[l + 1]) - running);
    }
    schedule.phis[l] = phi;
    running += phi;
  }
  return schedule;
}

std::vector<Complex> reconstruct_amplitudes(const AngleSchedule& schedule,
                                            std::size_t dimension) {
  if (dimension == 0) throw ValidationError("dimension must be positive");
  if (schedule.thetas.size() != dimension - 1 ||
      schedule.phis.size() != dimension - 1) {
    throw ValidationError("schedule length does not match dimension");
  }
  std::vector<Complex> out(dimension, 0.0);
  Complex prefix = 1.0;
  for (std::size_t l = 0; l + 1 < dimension; ++l) {
    out[l] = prefix * std::cos(schedule.thetas[l]);
    prefix *= std::polar(1.0, schedule.phis[l]) * std::sin(schedule.thetas[l]);
  }
  out[dimension - 1] = prefix;
  return out;
}

nlohmann::json angle_schedule_to_json(const AngleSchedule& schedule) {
  nlohmann::json j;
  j["thetas"] = schedule.thetas;
  j["phis"] = schedule.phis;
  j["rescale"] = {schedule.rescale.real(), schedule.rescale.imag()};
  if (schedule.rescale_pivot != 0) j["rescale_pivot"] = schedule.rescale_pivot;
  return j;
}

AngleSchedule angle_schedule_from_json(const nlohmann::json& j) {
  AngleSchedule schedule;
  try {
    schedule.thetas = j.at("thetas").get<std::vector<double>>();
    schedule.phis = j.at("phis").get<std::vector<double>>();
    const auto r = j.at("rescale").get<std::vector<double>>();
    if (r.size() != 2) throw IoError("rescale must be [re, im]");
    schedule.rescale = Complex(r[0], r[1]);
    schedule.rescale_pivot = j.value("rescale_pivot", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad angle schedule JSON: ") + e.what());
  }
  if (schedule.thetas.size() != schedule.phis.size()) {
    throw ValidationError("thetas and phis differ in length");
  }
  return schedule;
}

}  // namespace graystate
