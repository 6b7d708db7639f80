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

#include "graystate/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

namespace graystate {

namespace {

void normalize(std::vector<Complex>& a) {
  double norm_sq = 0.0;
  for (const Complex& v : a) norm_sq += std::norm(v);
  if (norm_sq == 0.0) throw ValidationError("amplitude list has zero norm");
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& v : a) v *= scale;
}

void check_code_shape(const GrayCode& code) {
  code.spec.validate();
  if (code.entries.empty()) throw ValidationError("code has no entries");
  for (const Ditstring& m : code.entries) {
    if (static_cast<int>(m.size()) != code.spec.n) {
      throw ValidationError("entry has wrong length");
    }
  }
}

// z^p for integer p >= 0 by repeated multiplication; magnon positions are
// small, and integer powers keep conjugate root pairs exactly conjugate.
Complex int_pow(const Complex& z, int p) {
  Complex out = 1.0;
  for (int t = 0; t < p; ++t) out *= z;
  return out;
}

}  // namespace

Complex aklt_trace(const Ditstring& m) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  // Row-major 2x2: {a, b, c, d} = [[a, b], [c, d]].
  static const double a0[4] = {0.0, 1.0, 0.0, 0.0};
  const double a1[4] = {-inv_sqrt2, 0.0, 0.0, inv_sqrt2};
  static const double a2[4] = {0.0, 0.0, -1.0, 0.0};

  double p[4] = {1.0, 0.0, 0.0, 1.0};
  for (std::size_t r = m.size(); r-- > 0;) {
    const double* f = nullptr;
    switch (m[r]) {
      case 0: f = a0; break;
      case 1: f = a1; break;
      case 2: f = a2; break;
      default: throw ValidationError("digit out of range for spin 1");
    }
    const double q[4] = {p[0] * f[0] + p[1] * f[2], p[0] * f[1] + p[1] * f[3],
                         p[2] * f[0] + p[3] * f[2], p[2] * f[1] + p[3] * f[3]};
    std::copy(q, q + 4, p);
  }
  return p[0] + p[3];
}

std::vector<Complex> aklt_amplitudes(const GrayCode& code) {
  check_code_shape(code);
  if (code.spec.two_s != 2) {
    throw InvalidSpecError("valence bond solid needs two_s = 2");
  }
  if (code.spec.k != code.spec.n) {
    throw InvalidSpecError("valence bond solid lives in the k = n sector");
  }
  if (code.spec.n < 3) throw InvalidSpecError("chain needs at least 3 sites");
  std::vector<Complex> out;
  out.reserve(code.entries.size());
  for (const Ditstring& m : code.entries) out.push_back(aklt_trace(m));
  normalize(out);
  return out;
}

std::vector<Complex> dicke_amplitudes(const GrayCode& code) {
  check_code_shape(code);
  const int two_s = code.spec.two_s;
  const std::uint64_t total =
      binomial(static_cast<std::uint64_t>(two_s) * code.spec.n,
               static_cast<std::uint64_t>(code.spec.k));
  if (total == 0) throw EmptySectorError("sector is empty");
  std::vector<Complex> out;
  out.reserve(code.entries.size());
  for (const Ditstring& m : code.entries) {
    std::uint64_t prod = 1;
    for (int v : m) {
      if (v < 0 || v > two_s) throw ValidationError("digit out of range");
      const std::uint64_t c = binomial(static_cast<std::uint64_t>(two_s),
                                       static_cast<std::uint64_t>(v));
      if (prod > std::numeric_limits<std::uint64_t>::max() / c) {
        throw Error("weight overflow");
      }
      prod *= c;
    }
    out.push_back(std::sqrt(static_cast<double>(prod) /
                            static_cast<double>(total)));
  }
  normalize(out);
  return out;
}

void BetheRoots::validate() const {
  if (n < 1) throw InvalidSpecError("n must be at least 1");
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
  if (k < 0) throw InvalidSpecError("k must be non-negative");
  if (static_cast<int>(u.size()) != k) {
    throw ValidationError("root count differs from k");
  }
}

std::vector<Complex> bethe_phase_factors(const BetheRoots& roots) {
  roots.validate();
  const Complex is(0.0, roots.s());
  std::vector<Complex> z;
  z.reserve(roots.u.size());
  for (const Complex& u : roots.u) {
    const Complex den = u - is;
    if (std::abs(den) == 0.0) {
      throw ValidationError("rapidity sits at the pole u = i s");
    }
    z.push_back((u + is) / den);
  }
  return z;
}

std::vector<Complex> bethe_momenta(const BetheRoots& roots) {
  std::vector<Complex> out = bethe_phase_factors(roots);
  for (Complex& z : out) z = Complex(0.0, -1.0) * std::log(z);
  return out;
}

std::vector<double> bethe_residuals(const BetheRoots& roots) {
  const std::vector<Complex> z = bethe_phase_factors(roots);
  const int k = roots.k;
  std::vector<double> out(k, 0.0);
  for (int j = 0; j < k; ++j) {
    Complex rhs = 1.0;
    bool singular = false;
    for (int l = 0; l < k; ++l) {
      if (l == j) continue;
      const Complex diff = roots.u[j] - roots.u[l];
      const Complex den = diff - Complex(0.0, 1.0);
      if (std::abs(den) == 0.0) {
        singular = true;
        break;
      }
      rhs *= (diff + Complex(0.0, 1.0)) / den;
    }
    out[j] = singular ? std::numeric_limits<double>::infinity()
                      : std::abs(int_pow(z[j], roots.n) - rhs);
  }
  return out;
}

Complex bethe_energy_sum(const BetheRoots& roots) {
  roots.validate();
  const double s = roots.s();
  Complex acc = 0.0;
  for (const Complex& u : roots.u) {
    const Complex den = u * u + s * s;
    if (std::abs(den) == 0.0) {
      throw ValidationError("rapidity sits at the pole u = i s");
    }
    acc += -static_cast<double>(roots.two_s) / den;
  }
  return acc;
}

double bethe_energy(const BetheRoots& roots) {
  return bethe_energy_sum(roots).real();
}

BetheRoots bethe_one_magnon(int n, int two_s, int q) {
  if (n < 2) throw InvalidSpecError("n must be at least 2");
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
  if (q < 1 || q > n - 1) {
    throw InvalidSpecError("momentum index q must lie in 1 .. n - 1");
  }
  const double s = two_s / 2.0;
  const double angle = std::numbers::pi * q / n;
  return {n, 1, two_s, {Complex(s * std::cos(angle) / std::sin(angle), 0.0)}};
}

std::vector<Complex> bethe_amplitudes(const GrayCode& code,
                                      const BetheRoots& roots) {
  check_code_shape(code);
  roots.validate();
  if (roots.n != code.spec.n || roots.k != code.spec.k ||
      roots.two_s != code.spec.two_s) {
    throw ValidationError("roots and code describe different sectors");
  }
  const int k = roots.k;
  if (k > kMaxBetheMagnons) {
    throw CapExceededError("magnon count " + std::to_string(k) +
                           " exceeds cap " +
                           std::to_string(kMaxBetheMagnons));
  }
  if (k == 0) {
    if (code.entries.size() != 1) {
      throw ValidationError("k = 0 sector has exactly one entry");
    }
    return {Complex(1.0)};
  }

  const std::vector<Complex> z = bethe_phase_factors(roots);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (std::abs(z[a] - z[b]) < 1e-12) {
        throw ValidationError("coincident phase factors");
      }
    }
  }

  // z_j^x for x = 1 .. n, reused across every permutation and ditstring.
  std::vector<std::vector<Complex>> z_pow(k,
                                          std::vector<Complex>(roots.n + 1));
  for (int j = 0; j < k; ++j) {
    z_pow[j][0] = 1.0;
    for (int x = 1; x <= roots.n; ++x) z_pow[j][x] = z_pow[j][x - 1] * z[j];
  }

  struct Term {
    std::vector<int> perm;
    Complex weight;
  };
  std::vector<Term> terms;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  const double inv_two_s = 1.0 / roots.two_s;
  do {
    Complex weight = 1.0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        const Complex za = z[perm[a]];
        const Complex zb = z[perm[b]];
        weight *= 1.0 - inv_two_s * (za - 1.0) * (zb - 1.0) / (za - zb);
      }
    }
    terms.push_back({perm, weight});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Complex> out;
  out.reserve(code.entries.size());
  std::vector<int> xs;
  xs.reserve(k);
  for (const Ditstring& m : code.entries) {
    xs.clear();
    for (int r = 0; r < code.spec.n; ++r) {
      if (m[r] < 0 || m[r] > roots.two_s) {
        throw ValidationError("digit out of range");
      }
      for (int rep = 0; rep < m[r]; ++rep) xs.push_back(r + 1);
    }
    if (static_cast<int>(xs.size()) != k) {
      throw ValidationError("digit sum differs from k");
    }
    Complex coord = 0.0;
    for (const Term& term : terms) {
      Complex prod = term.weight;
      for (int t = 0; t < k; ++t) prod *= z_pow[term.perm[t]][xs[t]];
      coord += prod;
    }
    double weight_sq = 1.0;
    for (int r = 0; r < code.spec.n; ++r) {
      weight_sq *= static_cast<double>(
          binomial(static_cast<std::uint64_t>(roots.two_s),
                   static_cast<std::uint64_t>(m[r])));
    }
    out.push_back(coord * std::sqrt(weight_sq));
  }
  normalize(out);
  return out;
}

nlohmann::json bethe_roots_to_json(const BetheRoots& roots) {
  nlohmann::json j;
  j["n"] = roots.n;
  j["k"] = roots.k;
  j["s_times_2"] = roots.two_s;
  auto u = nlohmann::json::array();
  for (const Complex& v : roots.u) u.push_back({v.real(), v.imag()});
  j["u"] = std::move(u);
  return j;
}

BetheRoots bethe_roots_from_json(const nlohmann::json& j) {
  BetheRoots roots;
  try {
    roots.n = j.at("n").get<int>();
    roots.k = j.at("k").get<int>();
    roots.two_s = j.at("s_times_2").get<int>();
    for (const nlohmann::json& v : j.at("u")) {
      if (!v.is_array() || v.size() != 2) {
        throw IoError("each root must be [re, im]");
      }
      roots.u.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad roots JSON: ") + e.what());
  }
  roots.validate();
  return roots;
}

std::vector<AmplitudeEntry> amplitude_entries_from_json(
    const nlohmann::json& j) {
  if (!j.is_array()) throw IoError("amplitude file must be a JSON array");
  std::vector<AmplitudeEntry> out;
  out.reserve(j.size());
  try {
    for (const nlohmann::json& row : j) {
      AmplitudeEntry entry;
      entry.m = row.at("m").get<Ditstring>();
      entry.value = Complex(row.at("re").get<double>(),
                            row.value("im", 0.0));
      out.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad amplitude JSON: ") + e.what());
  }
  return out;
}

std::vector<Complex> order_along_code(const std::vector<AmplitudeEntry>& list,
                                      const GrayCode& code) {
  check_code_shape(code);
  std::map<Ditstring, Complex> by_entry;
  for (const AmplitudeEntry& entry : list) {
    const auto [it, inserted] = by_entry.emplace(entry.m, entry.value);
    if (!inserted) {
      throw ValidationError("duplicate amplitude for ditstring " +
                            display_ditstring(entry.m, code.spec.two_s));
    }
  }
  std::vector<Complex> out;
  out.reserve(code.entries.size());
  for (const Ditstring& m : code.entries) {
    const auto it = by_entry.find(m);
    if (it == by_entry.end()) {
      throw ValidationError("missing amplitude for ditstring " +
                            display_ditstring(m, code.spec.two_s));
    }
    out.push_back(it->second);
    by_entry.erase(it);
  }
  if (!by_entry.empty()) {
    throw ValidationError("amplitude for ditstring " +
                          display_ditstring(by_entry.begin()->first,
                                            code.spec.two_s) +
                          " lies outside the sector listing");
  }
  return out;
}

}  // namespace graystate
