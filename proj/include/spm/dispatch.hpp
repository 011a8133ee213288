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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spm/approx.hpp"
#include "spm/brute.hpp"
#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/matching.hpp"
#include "spm/regular.hpp"
#include "spm/solution.hpp"

namespace spm {

enum class Algorithm { Auto, Regular32, RegularD2, A2, Greedy, ContinuousGreedy, Brute };

inline constexpr std::array<std::string_view, 7> kAlgorithmNames = {
    "auto", "32regular", "d2regular", "a2", "greedy", "cg", "brute"};

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (std::size_t i = 0; i < kAlgorithmNames.size(); ++i) {
    if (kAlgorithmNames[i] == name) return static_cast<Algorithm>(i);
  }
  return std::nullopt;
}

inline std::string_view algorithm_name(Algorithm a) {
  return kAlgorithmNames[static_cast<std::size_t>(a)];
}

// (d,2)-regular degree d of the instance, if any.
inline std::optional<int> left_regular_degree_with_pairs(const BipartiteInstance& inst) {
  if (inst.num_goods() == 0) return std::nullopt;
  const int d = inst.degree_of_good(0);
  if (!is_biregular(inst, d, 2)) return std::nullopt;
  return d;
}

// TwoPM fallback when A cannot be saturated: allocate along a maximum
// matching and use every unmatched bidder as second-price bidder.
inline Solution solve_matching_complement(const BipartiteInstance& inst) {
  const BipartiteMatching m = max_matching_bipartite(inst);
  std::vector<char> used(static_cast<std::size_t>(inst.num_bidders()), 0);
  for (const BidEdge& e : m) used[e.b] = 1;
  std::vector<int> s;
  for (int b = 0; b < inst.num_bidders(); ++b) {
    if (!used[b]) s.push_back(b);
  }
  return make_solution(inst, ProblemKind::TwoPM, std::move(s), m, "maxmatching", "heuristic");
}

// Picks the strongest applicable strategy:
//   (3,2)-regular           -> 32regular (exact for 2PPM, 9/10 for 2PM)
//   (d,2)-regular, d >= 4   -> d2regular (exact)
//   every good has degree 2 -> a2 (exact for 2PPM)
//   otherwise               -> greedy
inline Solution solve_auto(const BipartiteInstance& inst, ProblemKind kind = ProblemKind::TwoPPM) {
  if (const std::optional<int> d = left_regular_degree_with_pairs(inst)) {
    if (*d == 3) return solve_32_regular(inst, kind);
    if (*d >= 4) return solve_d2_regular_d4(inst, kind);
  }
  const bool perfect = a_perfect_matching(inst).has_value();
  bool left_two = inst.num_goods() > 0;
  for (int a = 0; a < inst.num_goods() && left_two; ++a) left_two = inst.degree_of_good(a) == 2;
  if (left_two && perfect) return solve_a2(inst, kind);
  if (perfect) return solve_greedy(inst, kind);
  if (kind == ProblemKind::TwoPM) return solve_matching_complement(inst);
  throw PreconditionError("instance has no A-perfect matching");
}

inline Solution solve_with(const BipartiteInstance& inst, ProblemKind kind, Algorithm algo,
                           const ContinuousGreedyParams& cg = {}) {
  switch (algo) {
    case Algorithm::Auto:
      return solve_auto(inst, kind);
    case Algorithm::Regular32:
      return solve_32_regular(inst, kind);
    case Algorithm::RegularD2:
      return solve_d2_regular_d4(inst, kind);
    case Algorithm::A2:
      return solve_a2(inst, kind);
    case Algorithm::Greedy:
      return solve_greedy(inst, kind);
    case Algorithm::ContinuousGreedy:
      return solve_continuous_greedy(inst, cg, kind);
    case Algorithm::Brute:
      return kind == ProblemKind::TwoPPM ? solve_brute_2ppm(inst) : solve_brute_2pm(inst);
  }
  throw InputError("unknown algorithm");
}

}  // namespace spm
