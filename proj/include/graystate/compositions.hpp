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
 * Gray codes for bounded compositions.
 *
 * A ditstring (m_1, ..., m_n) with digits 0 <= m_r <= two_s and fixed digit
 * sum k is a composition of k into n bounded parts.  A Gray code orders every
 * such composition so that consecutive entries differ by +1 at one position
 * and -1 at another (Manhattan distance exactly 2).  Two generators are
 * provided: a non-recursive successor rule with O(n) step cost, and a
 * Warnsdorff-guided Hamiltonian path search with backtracking.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graystate/errors.hpp"

namespace graystate {

/// Digits of one basis label, index r-1 holds m_r.  Position 1 is the
/// rightmost digit of the displayed string m_n ... m_1.
using Ditstring = std::vector<int>;

/// Parameters of one digit-sum sector: n qudits of d = two_s + 1 levels,
/// digit sum k.
struct CompositionSpec {
  int n = 0;
  int k = 0;
  int two_s = 0;

  int d() const { return two_s + 1; }

  /// True when no ditstring satisfies the digit-sum constraint.
  bool sector_empty() const { return k > static_cast<std::int64_t>(n) * two_s; }

  /// Throws InvalidSpecError unless n >= 1, two_s >= 1 and k >= 0.
  /// An empty sector is a valid spec; generators reject it separately.
  void validate() const;

  bool operator==(const CompositionSpec&) const = default;
};

/// C(n, r) in exact integer arithmetic.  Throws Error on uint64 overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/**
 * Number of ditstrings in the sector, by inclusion-exclusion over parts
 * forced past two_s:
 *
 *   D = sum_{l=0}^{floor(k/d)} (-1)^l C(n, l) C(k - l d + n - 1, n - 1).
 *
 * Returns 0 when the sector is empty.
 */
std::uint64_t dimension(const CompositionSpec& spec);

/// All sector ditstrings, ascending in the displayed order m_n ... m_1.
std::vector<Ditstring> enumerate_sector(const CompositionSpec& spec);

/// Walker state for the non-recursive successor rule: the digits g_1 .. g_n
/// of the current composition together with the sector parameters.
struct WalshState {
  int k = 0;
  int two_s = 0;
  std::vector<int> g;
};

/**
 * First composition of the enumeration: the lexicographically largest one
 * under the (g_1, g_2, ...) reading, filled greedily from the front,
 * g_1 = min(two_s, k) and so on.  Throws EmptySectorError when the sector
 * is empty.
 */
WalshState walsh_initial(const CompositionSpec& spec);

/**
 * Successor of a composition in the Gray ordering, or nullopt at the end.
 *
 * With suffix sums S_i = sum_{l>i} g_l, position i can hold values
 * L_i = max(0, k - S_i - two_s (i - 1)) through U_i = min(two_s, k - S_i);
 * the scan direction at i is fixed by the parity of S_i: even parity runs
 * L_i upward to U_i, odd parity runs U_i downward to L_i.  The successor
 * bumps the lowest position i >= 2 not yet at the final value of its scan
 * by (-1)^{S_i}, then resets the highest position j < i that is off the
 * first value of its scan (recomputed against the updated suffix sums).
 *
 * Exactly one digit moves by +1 and one by -1, so consecutive outputs are
 * Gray neighbors.  Cost is O(n) per call.  Throws ValidationError when the
 * digits are out of range or do not sum to k.
 */
std::optional<WalshState> walsh_successor(const WalshState& state);

/// A complete Gray-ordered listing of one sector.
struct GrayCode {
  CompositionSpec spec;
  std::vector<Ditstring> entries;
};

/// Default cap on generated sector sizes; overridable per call and through
/// GRAYSTATE_MAX_DIM in the command line tool.
inline constexpr std::uint64_t kDefaultMaxCodeEntries = std::uint64_t{1} << 24;

/// Runs walsh_initial / walsh_successor to exhaustion.  Throws
/// EmptySectorError on an empty sector and CapExceededError when the sector
/// dimension exceeds max_entries.
GrayCode walsh_gray_code(const CompositionSpec& spec,
                         std::uint64_t max_entries = kDefaultMaxCodeEntries);

/**
 * Hamiltonian path search on the sector graph whose edges join Gray
 * neighbors.  Moves are ranked by Warnsdorff's rule (fewest onward unvisited
 * neighbors first, ties broken toward the entry that sorts first in displayed
 * order) and exhausted by depth-first backtracking, so a returned code is
 * always valid and the search is deterministic.  Default start is the
 * lexicographically largest composition under the (g_1, g_2, ...) reading.
 *
 * Throws EmptySectorError / CapExceededError as walsh_gray_code does,
 * InvalidSpecError when start lies outside the sector, and
 * SearchFailureError when every branch from the start dead-ends.
 */
GrayCode warnsdorff_gray_code(
    const CompositionSpec& spec,
    const std::optional<Ditstring>& start = std::nullopt,
    std::uint64_t max_entries = kDefaultMaxCodeEntries);

/// Outcome of verify_gray_property.  When ok is false, first_violation is
/// the index of the offending entry (for pair violations, the left entry).
struct GrayVerification {
  bool ok = true;
  std::size_t first_violation = 0;
  std::string message;
};

/// Checks every entry lies in the sector, consecutive entries are Gray
/// neighbors, no entry repeats, and the code covers the whole sector.
GrayVerification verify_gray_property(const GrayCode& code);

/// One transition of a Gray code: entry l to entry l+1 raises position i
/// from m_i and lowers position j from m_j.
struct GrayStep {
  std::size_t l = 0;
  int i = 0;
  int j = 0;
  int m_i = 0;
  int m_j = 0;

  bool operator==(const GrayStep&) const = default;
};

/// Transition list of a code.  Requires only the pairwise Gray property and
/// throws ValidationError at the first adjacent pair violating it.
std::vector<GrayStep> gray_steps(const GrayCode& code);

/// Displayed form m_n ... m_1: one character per digit when two_s <= 9,
/// comma-separated otherwise.
std::string display_ditstring(const Ditstring& m, int two_s);

/// Inverse of display_ditstring.  Throws IoError on malformed text and
/// ValidationError when the digits do not fit the given sector.
Ditstring parse_ditstring(const std::string& text, const CompositionSpec& spec);

/// Text form: header "# n k two_s", one displayed ditstring per line.
std::string gray_code_to_text(const GrayCode& code);
GrayCode gray_code_from_text(const std::string& text);

/// JSON form: {"n", "k", "two_s", "entries": [[m_1, ..., m_n], ...]}.
nlohmann::json gray_code_to_json(const GrayCode& code);
GrayCode gray_code_from_json(const nlohmann::json& j);

}  // namespace graystate
