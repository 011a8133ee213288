// Copyright 2026 The Authors.
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

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"

namespace spm {

// TwoPM: choose S in B and W in A with a W-saturating matching into B \ S.
// TwoPPM: same with W = A.
enum class ProblemKind { TwoPM, TwoPPM };

inline const char* kind_name(ProblemKind k) { return k == ProblemKind::TwoPM ? "2pm" : "2ppm"; }

inline std::optional<ProblemKind> parse_kind(std::string_view s) {
  if (s == "2pm") return ProblemKind::TwoPM;
  if (s == "2ppm") return ProblemKind::TwoPPM;
  return std::nullopt;
}

// A certificate: the second-price set S, the allocated goods W, the
// allocation and its profit |N(S) n W|. `strategy` and `guarantee` are
// metadata filled in by solvers and never serialized.
struct Solution {
  ProblemKind kind = ProblemKind::TwoPPM;
  std::vector<int> s_set;
  std::vector<int> w_set;
  BipartiteMatching matching;
  int profit = 0;

  std::string strategy;
  std::string guarantee;
};

// N(S): the goods adjacent to at least one bidder of `s`, ascending.
inline std::vector<int> neighborhood(const BipartiteInstance& inst, std::span<const int> s) {
  std::vector<char> hit(static_cast<std::size_t>(inst.num_goods()), 0);
  for (int b : s) {
    if (b < 0 || b >= inst.num_bidders()) {
      throw InputError("bidder index " + std::to_string(b) + " out of range");
    }
    for (int a : inst.goods_of(b)) hit[a] = 1;
  }
  std::vector<int> out;
  for (int a = 0; a < inst.num_goods(); ++a) {
    if (hit[a]) out.push_back(a);
  }
  return out;
}

inline std::vector<int> neighborhood(const BipartiteInstance& inst, const std::vector<int>& s) {
  return neighborhood(inst, std::span<const int>(s));
}

// |N(S)| without materializing the set.
inline int coverage(const BipartiteInstance& inst, std::span<const int> s) {
  return static_cast<int>(neighborhood(inst, s).size());
}

struct Validation {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline bool strictly_increasing_in(std::span<const int> v, int bound) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= bound) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

inline int profit_unchecked(const BipartiteInstance& inst, const Solution& sol) {
  const std::vector<int> covered = neighborhood(inst, sol.s_set);
  std::vector<int> both;
  std::set_intersection(covered.begin(), covered.end(), sol.w_set.begin(), sol.w_set.end(),
                        std::back_inserter(both));
  return static_cast<int>(both.size());
}

}  // namespace detail

// Checks every Solution invariant against `inst`; the report names the first
// violation found. Never throws.
inline Validation validate_solution(const BipartiteInstance& inst, const Solution& sol) {
  auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();

  if (!detail::strictly_increasing_in(sol.s_set, nb)) return fail("S not a sorted subset of B");
  if (!detail::strictly_increasing_in(sol.w_set, na)) return fail("W not a sorted subset of A");

  std::vector<int> mate_a(static_cast<std::size_t>(na), -1);
  std::vector<int> mate_b(static_cast<std::size_t>(nb), -1);
  for (const BidEdge& e : sol.matching) {
    if (!inst.has_edge(e.a, e.b)) return fail("matching uses a non-edge");
    if (mate_a[e.a] != -1 || mate_b[e.b] != -1) return fail("matching endpoints not disjoint");
    mate_a[e.a] = e.b;
    mate_b[e.b] = e.a;
  }
  for (int b : sol.s_set) {
    if (mate_b[b] != -1) return fail("S meets matching");
  }
  std::vector<char> in_w(static_cast<std::size_t>(na), 0);
  for (int a : sol.w_set) in_w[a] = 1;
  for (int a = 0; a < na; ++a) {
    if (in_w[a] && mate_a[a] == -1) return fail("W not saturated");
    if (!in_w[a] && mate_a[a] != -1) return fail("matching leaves W");
  }
  if (sol.kind == ProblemKind::TwoPPM) {
    if (static_cast<int>(sol.w_set.size()) != na) return fail("not A-perfect");
    if (static_cast<int>(sol.s_set.size()) > nb - na) return fail("S larger than n_b - n_a");
  }
  if (detail::profit_unchecked(inst, sol) != sol.profit) return fail("profit mismatch");
  return {};
}

// |N(S) n W|. Throws InputError when the solution does not validate
// (the stored profit field is not trusted here).
inline int profit(const BipartiteInstance& inst, const Solution& sol) {
  Solution probe = sol;
  probe.profit = detail::profit_unchecked(inst, sol);
  if (Validation v = validate_solution(inst, probe); !v) {
    throw InputError("invalid solution: " + v.violation);
  }
  return probe.profit;
}

// Assembles a Solution from S and an allocation, sorting everything and
// filling W from the matched goods and the profit from N(S).
inline Solution make_solution(const BipartiteInstance& inst, ProblemKind kind,
                              std::vector<int> s_set, BipartiteMatching matching,
                              std::string strategy = {}, std::string guarantee = {}) {
  Solution sol;
  sol.kind = kind;
  std::sort(s_set.begin(), s_set.end());
  std::sort(matching.begin(), matching.end());
  sol.s_set = std::move(s_set);
  for (const BidEdge& e : matching) sol.w_set.push_back(e.a);
  sol.matching = std::move(matching);
  sol.profit = detail::profit_unchecked(inst, sol);
  sol.strategy = std::move(strategy);
  sol.guarantee = std::move(guarantee);
  return sol;
}

}  // namespace spm
