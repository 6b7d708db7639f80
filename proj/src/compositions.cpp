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

#include "graystate/compositions.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace graystate {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Max = ~u128{0};

u128 binomial_u128(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (n - r < r) r = n - r;
  u128 out = 1;
  for (std::uint64_t t = 1; t <= r; ++t) {
    const std::uint64_t factor = n - r + t;
    if (out > kU128Max / factor) throw Error("binomial overflow");
    // out holds C(n - r + t - 1, t - 1), so the division is exact.
    out = out * factor / t;
  }
  return out;
}

// Admissible range for g_i given the suffix sum S_i = sum_{l>i} g_l: the
// prefix g_1 .. g_{i-1} must absorb k - S_i - g_i within 0 .. two_s each.
struct PartRange {
  int lo = 0;
  int hi = 0;
};

PartRange part_range(int k, int two_s, int i, int suffix_sum) {
  return {std::max(0, k - suffix_sum - two_s * (i - 1)),
          std::min(two_s, k - suffix_sum)};
}

void check_walsh_state(const WalshState& state) {
  if (state.g.empty() || state.two_s < 1 || state.k < 0) {
    throw ValidationError("malformed composition state");
  }
  int sum = 0;
  for (int g : state.g) {
    if (g < 0 || g > state.two_s) {
      throw ValidationError("composition digit out of range");
    }
    sum += g;
  }
  if (sum != state.k) {
    throw ValidationError("composition digits do not sum to k");
  }
}

void enumerate_rec(const CompositionSpec& spec, int pos, int rem,
                   Ditstring& cur, std::vector<Ditstring>& out) {
  if (pos == 0) {
    out.push_back(cur);
    return;
  }
  const int lo = std::max(0, rem - spec.two_s * (pos - 1));
  const int hi = std::min(spec.two_s, rem);
  for (int v = lo; v <= hi; ++v) {
    cur[pos - 1] = v;
    enumerate_rec(spec, pos - 1, rem - v, cur, out);
  }
}

void check_generation_allowed(const CompositionSpec& spec,
                              std::uint64_t max_entries, std::uint64_t& dim) {
  spec.validate();
  dim = dimension(spec);
  if (dim == 0) {
    throw EmptySectorError("sector of digit sum " + std::to_string(spec.k) +
                           " is empty for n=" + std::to_string(spec.n) +
                           ", two_s=" + std::to_string(spec.two_s));
  }
  if (dim > max_entries) {
    throw CapExceededError("sector dimension " + std::to_string(dim) +
                           " exceeds cap " + std::to_string(max_entries));
  }
}

}  // namespace

void CompositionSpec::validate() const {
  if (n < 1) throw InvalidSpecError("n must be at least 1");
  if (two_s < 1) throw InvalidSpecError("two_s must be at least 1");
  if (k < 0) throw InvalidSpecError("k must be non-negative");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  const u128 out = binomial_u128(n, r);
  if (out > std::numeric_limits<std::uint64_t>::max()) {
    throw Error("binomial overflow");
  }
  return static_cast<std::uint64_t>(out);
}

std::uint64_t dimension(const CompositionSpec& spec) {
  spec.validate();
  if (spec.sector_empty()) return 0;
  const int d = spec.d();
  __int128 acc = 0;
  for (int l = 0; l <= spec.k / d; ++l) {
    const u128 a = binomial_u128(static_cast<std::uint64_t>(spec.n),
                                 static_cast<std::uint64_t>(l));
    const u128 b = binomial_u128(
        static_cast<std::uint64_t>(spec.k - l * d + spec.n - 1),
        static_cast<std::uint64_t>(spec.n - 1));
    if (a != 0 && b > kU128Max / a) throw Error("dimension overflow");
    const u128 term = a * b;
    if (term > static_cast<u128>(std::numeric_limits<__int128>::max())) {
      throw Error("dimension overflow");
    }
    acc += (l % 2 == 0) ? static_cast<__int128>(term)
                        : -static_cast<__int128>(term);
  }
  if (acc < 0 ||
      acc > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
    throw Error("dimension overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Ditstring> enumerate_sector(const CompositionSpec& spec) {
  spec.validate();
  std::vector<Ditstring> out;
  if (spec.sector_empty()) return out;
  Ditstring cur(static_cast<std::size_t>(spec.n));
  enumerate_rec(spec, spec.n, spec.k, cur, out);
  return out;
}

WalshState walsh_initial(const CompositionSpec& spec) {
  spec.validate();
  if (spec.sector_empty()) {
    throw EmptySectorError("no composition of " + std::to_string(spec.k) +
                           " into " + std::to_string(spec.n) +
                           " parts bounded by " + std::to_string(spec.two_s));
  }
  WalshState state{spec.k, spec.two_s, std::vector<int>(spec.n, 0)};
  int rem = spec.k;
  for (int i = 0; i < spec.n; ++i) {
    state.g[i] = std::min(spec.two_s, rem);
    rem -= state.g[i];
  }
  return state;
}

std::optional<WalshState> walsh_successor(const WalshState& state) {
  check_walsh_state(state);
  const int n = static_cast<int>(state.g.size());
  const int k = state.k;
  const int two_s = state.two_s;

  // suffix[i - 1] = S_i.
  std::vector<int> suffix(n, 0);
  for (int i = n - 1; i >= 1; --i) suffix[i - 1] = suffix[i] + state.g[i];

  int pivot = 0;
  for (int i = 2; i <= n; ++i) {
    const int s = suffix[i - 1];
    const PartRange r = part_range(k, two_s, i, s);
    const int last = (s % 2 == 0) ? r.hi : r.lo;
    if (state.g[i - 1] != last) {
      pivot = i;
      break;
    }
  }
  if (pivot == 0) return std::nullopt;

  WalshState next = state;
  const int delta = (suffix[pivot - 1] % 2 == 0) ? 1 : -1;
  next.g[pivot - 1] += delta;

  // Suffix sums below the pivot all shift by delta; the highest position
  // off the first value of its (re-oriented) scan absorbs -delta.
  for (int j = pivot - 1; j >= 1; --j) {
    const int s = suffix[j - 1] + delta;
    const PartRange r = part_range(k, two_s, j, s);
    const int first = (s % 2 == 0) ? r.lo : r.hi;
    if (next.g[j - 1] != first) {
      next.g[j - 1] = first;
      return next;
    }
  }
  throw ValidationError("composition is not reachable by this enumeration");
}

GrayCode walsh_gray_code(const CompositionSpec& spec,
                         std::uint64_t max_entries) {
  std::uint64_t dim = 0;
  check_generation_allowed(spec, max_entries, dim);
  GrayCode code{spec, {}};
  code.entries.reserve(dim);
  WalshState state = walsh_initial(spec);
  code.entries.push_back(state.g);
  while (auto next = walsh_successor(state)) {
    state = std::move(*next);
    code.entries.push_back(state.g);
  }
  if (code.entries.size() != dim) {
    throw Error("successor walk covered " +
                std::to_string(code.entries.size()) + " of " +
                std::to_string(dim) + " compositions");
  }
  return code;
}

GrayCode warnsdorff_gray_code(const CompositionSpec& spec,
                              const std::optional<Ditstring>& start,
                              std::uint64_t max_entries) {
  std::uint64_t dim = 0;
  check_generation_allowed(spec, max_entries, dim);

  const std::vector<Ditstring> vertices = enumerate_sector(spec);
  std::map<Ditstring, std::uint32_t> index;
  for (std::uint32_t v = 0; v < vertices.size(); ++v) index[vertices[v]] = v;

  // Vertex ids follow displayed lexicographic order, so id order is the
  // tie-break order.
  std::vector<std::vector<std::uint32_t>> adj(vertices.size());
  for (std::uint32_t v = 0; v < vertices.size(); ++v) {
    Ditstring m = vertices[v];
    for (int i = 0; i < spec.n; ++i) {
      if (m[i] >= spec.two_s) continue;
      for (int j = 0; j < spec.n; ++j) {
        if (i == j || m[j] <= 0) continue;
        ++m[i];
        --m[j];
        adj[v].push_back(index.at(m));
        --m[i];
        ++m[j];
      }
    }
    std::sort(adj[v].begin(), adj[v].end());
  }

  std::uint32_t start_id = 0;
  if (start.has_value()) {
    const auto it = index.find(*start);
    if (it == index.end()) {
      throw InvalidSpecError("start ditstring lies outside the sector");
    }
    start_id = it->second;
  } else {
    start_id = index.at(walsh_initial(spec).g);
  }

  std::vector<char> visited(vertices.size(), 0);
  std::vector<std::uint32_t> path;
  path.reserve(dim);

  struct Frame {
    std::vector<std::uint32_t> candidates;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  auto push_vertex = [&](std::uint32_t v) {
    visited[v] = 1;
    path.push_back(v);
    Frame frame;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ranked;
    for (std::uint32_t c : adj[v]) {
      if (visited[c]) continue;
      std::uint32_t onward = 0;
      for (std::uint32_t w : adj[c]) onward += !visited[w];
      ranked.emplace_back(onward, c);
    }
    std::sort(ranked.begin(), ranked.end());
    frame.candidates.reserve(ranked.size());
    for (const auto& [onward, c] : ranked) frame.candidates.push_back(c);
    stack.push_back(std::move(frame));
  };

  push_vertex(start_id);
  while (path.size() < dim) {
    Frame& frame = stack.back();
    std::uint32_t chosen = 0;
    bool found = false;
    while (frame.next < frame.candidates.size()) {
      const std::uint32_t c = frame.candidates[frame.next++];
      if (!visited[c]) {
        chosen = c;
        found = true;
        break;
      }
    }
    if (found) {
      push_vertex(chosen);
      continue;
    }
    stack.pop_back();
    visited[path.back()] = 0;
    path.pop_back();
    if (stack.empty()) {
      throw SearchFailureError("no Hamiltonian Gray path from this start");
    }
  }

  GrayCode code{spec, {}};
  code.entries.reserve(dim);
  for (std::uint32_t v : path) code.entries.push_back(vertices[v]);
  return code;
}

GrayVerification verify_gray_property(const GrayCode& code) {
  code.spec.validate();
  const auto fail = [](std::size_t at, std::string msg) {
    return GrayVerification{false, at, std::move(msg)};
  };
  if (code.entries.empty()) return fail(0, "code has no entries");

  const int n = code.spec.n;
  for (std::size_t t = 0; t < code.entries.size(); ++t) {
    const Ditstring& m = code.entries[t];
    if (static_cast<int>(m.size()) != n) {
      return fail(t, "entry has wrong length");
    }
    int sum = 0;
    for (int v : m) {
      if (v < 0 || v > code.spec.two_s) {
        return fail(t, "digit out of range");
      }
      sum += v;
    }
    if (sum != code.spec.k) return fail(t, "digit sum differs from k");
  }

  for (std::size_t l = 0; l + 1 < code.entries.size(); ++l) {
    int plus = 0, minus = 0, other = 0;
    for (int r = 0; r < n; ++r) {
      const int diff = code.entries[l + 1][r] - code.entries[l][r];
      if (diff == 1) {
        ++plus;
      } else if (diff == -1) {
        ++minus;
      } else if (diff != 0) {
        ++other;
      }
    }
    if (plus != 1 || minus != 1 || other != 0) {
      return fail(l, "entries " + std::to_string(l) + " and " +
                         std::to_string(l + 1) + " are not Gray neighbors");
    }
  }

  std::map<Ditstring, std::size_t> seen;
  for (std::size_t t = 0; t < code.entries.size(); ++t) {
    const auto [it, inserted] = seen.emplace(code.entries[t], t);
    if (!inserted) {
      return fail(t, "entry repeats index " + std::to_string(it->second));
    }
  }

  const std::uint64_t dim = dimension(code.spec);
  if (code.entries.size() != dim) {
    return fail(code.entries.size(),
                "code lists " + std::to_string(code.entries.size()) +
                    " of " + std::to_string(dim) + " sector entries");
  }
  return {};
}

std::vector<GrayStep> gray_steps(const GrayCode& code) {
  code.spec.validate();
  std::vector<GrayStep> steps;
  if (code.entries.empty()) return steps;
  steps.reserve(code.entries.size() - 1);
  const int n = code.spec.n;
  for (std::size_t l = 0; l + 1 < code.entries.size(); ++l) {
    const Ditstring& a = code.entries[l];
    const Ditstring& b = code.entries[l + 1];
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) {
      throw ValidationError("entry has wrong length");
    }
    GrayStep step{l, 0, 0, 0, 0};
    int plus = 0, minus = 0;
    for (int r = 0; r < n; ++r) {
      const int diff = b[r] - a[r];
      if (diff == 1) {
        ++plus;
        step.i = r + 1;
        step.m_i = a[r];
      } else if (diff == -1) {
        ++minus;
        step.j = r + 1;
        step.m_j = a[r];
      } else if (diff != 0) {
        plus = minus = -1;
        break;
      }
    }
    if (plus != 1 || minus != 1) {
      throw ValidationError("entries " + std::to_string(l) + " and " +
                            std::to_string(l + 1) + " are not Gray neighbors");
    }
    steps.push_back(step);
  }
  return steps;
}

std::string display_ditstring(const Ditstring& m, int two_s) {
  std::ostringstream oss;
  const bool compact = two_s <= 9;
  for (std::size_t r = m.size(); r-- > 0;) {
    if (compact) {
      oss << m[r];
    } else {
      oss << m[r];
      if (r != 0) oss << ',';
    }
  }
  return oss.str();
}

Ditstring parse_ditstring(const std::string& text,
                          const CompositionSpec& spec) {
  spec.validate();
  std::vector<int> displayed;
  if (text.find(',') != std::string::npos) {
    std::istringstream iss(text);
    std::string field;
    while (std::getline(iss, field, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(field, &used);
        if (used != field.size()) throw IoError("bad digit '" + field + "'");
        displayed.push_back(v);
      } catch (const std::logic_error&) {
        throw IoError("bad digit '" + field + "'");
      }
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw IoError(std::string("bad digit '") + c + "'");
      }
      displayed.push_back(c - '0');
    }
  }
  if (static_cast<int>(displayed.size()) != spec.n) {
    throw ValidationError("ditstring length differs from n");
  }
  Ditstring m(displayed.rbegin(), displayed.rend());
  int sum = 0;
  for (int v : m) {
    if (v < 0 || v > spec.two_s) throw ValidationError("digit out of range");
    sum += v;
  }
  if (sum != spec.k) throw ValidationError("digit sum differs from k");
  return m;
}

std::string gray_code_to_text(const GrayCode& code) {
  std::ostringstream oss;
  oss << "# " << code.spec.n << ' ' << code.spec.k << ' ' << code.spec.two_s
      << '\n';
  for (const Ditstring& m : code.entries) {
    oss << display_ditstring(m, code.spec.two_s) << '\n';
  }
  return oss.str();
}

GrayCode gray_code_from_text(const std::string& text) {
  std::istringstream iss(text);
  std::string line;
  GrayCode code;
  bool have_header = false;
  while (std::getline(iss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    std::size_t begin = line.find_first_not_of(' ');
    if (begin == std::string::npos) continue;
    if (!have_header) {
      if (line[begin] != '#') throw IoError("missing '# n k two_s' header");
      std::istringstream header(line.substr(begin + 1));
      if (!(header >> code.spec.n >> code.spec.k >> code.spec.two_s)) {
        throw IoError("malformed '# n k two_s' header");
      }
      code.spec.validate();
      have_header = true;
      continue;
    }
    code.entries.push_back(parse_ditstring(line.substr(begin), code.spec));
  }
  if (!have_header) throw IoError("missing '# n k two_s' header");
  return code;
}

nlohmann::json gray_code_to_json(const GrayCode& code) {
  nlohmann::json j;
  j["n"] = code.spec.n;
  j["k"] = code.spec.k;
  j["two_s"] = code.spec.two_s;
  j["entries"] = code.entries;
  return j;
}

GrayCode gray_code_from_json(const nlohmann::json& j) {
  GrayCode code;
  try {
    code.spec.n = j.at("n").get<int>();
    code.spec.k = j.at("k").get<int>();
    code.spec.two_s = j.at("two_s").get<int>();
    code.entries = j.at("entries").get<std::vector<Ditstring>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad Gray code JSON: ") + e.what());
  }
  code.spec.validate();
  for (const Ditstring& m : code.entries) {
    if (static_cast<int>(m.size()) != code.spec.n) {
      throw ValidationError("entry has wrong length");
    }
    int sum = 0;
    for (int v : m) {
      if (v < 0 || v > code.spec.two_s) {
        throw ValidationError("digit out of range");
      }
      sum += v;
    }
    if (sum != code.spec.k) throw ValidationError("digit sum differs from k");
  }
  return code;
}

}  // namespace graystate
