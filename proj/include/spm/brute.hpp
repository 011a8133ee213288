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

// Exhaustive optimal solvers, used as oracles for the polynomial ones.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/matching.hpp"
#include "spm/solution.hpp"

namespace spm {

inline constexpr std::uint64_t kBrute2ppmMaxCandidates = 5'000'000;
inline constexpr int kBrute2pmMaxBidders = 20;

// Number of subsets of size <= k of an n-set, saturating at `cap` + 1.
inline std::uint64_t count_small_subsets(int n, int k, std::uint64_t cap = kBrute2ppmMaxCandidates) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, j)
  for (int j = 0; j <= k && j <= n; ++j) {
    total += binom;
    if (total > cap) return cap + 1;
    binom = binom * static_cast<std::uint64_t>(n - j) / static_cast<std::uint64_t>(j + 1);
    if (binom > cap) binom = cap + 1;
  }
  return total;
}

inline bool brute_2ppm_fits(const BipartiteInstance& inst) {
  const int k = inst.num_bidders() - inst.num_goods();
  return k >= 0 && count_small_subsets(inst.num_bidders(), k) <= kBrute2ppmMaxCandidates;
}

inline bool brute_2pm_fits(const BipartiteInstance& inst) {
  return inst.num_bidders() <= kBrute2pmMaxBidders;
}

// Optimal TwoPPM solution by enumerating every S with |S| <= n_b - n_a.
// Throws GuardError above 5e6 candidates, PreconditionError without an
// A-perfect matching.
inline Solution solve_brute_2ppm(const BipartiteInstance& inst) {
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();
  const int k = nb - na;
  if (k < 0) throw PreconditionError("more goods than bidders");
  const std::uint64_t candidates = count_small_subsets(nb, k);
  if (candidates > kBrute2ppmMaxCandidates) {
    throw GuardError("2PPM enumeration over " + std::to_string(nb) + " bidders with |S| <= " +
                     std::to_string(k) + " exceeds " + std::to_string(kBrute2ppmMaxCandidates) +
                     " candidates");
  }
  std::optional<BipartiteMatching> base = a_perfect_matching(inst);
  if (!base) throw PreconditionError("instance has no A-perfect matching");

  std::vector<int> best_s;
  BipartiteMatching best_m = *base;
  int best = 0;

  std::vector<int> current;
  std::vector<int> hits(static_cast<std::size_t>(na), 0);
  int covered = 0;
  // Depth-first over combinations in lexicographic order.
  auto visit = [&](auto&& self, int next) -> void {
    if (covered > best) {
      if (std::optional<BipartiteMatching> m = a_perfect_matching(inst, current)) {
        best = covered;
        best_s = current;
        best_m = std::move(*m);
      }
    }
    if (static_cast<int>(current.size()) == k) return;
    for (int b = next; b < nb; ++b) {
      current.push_back(b);
      for (int a : inst.goods_of(b)) covered += hits[a]++ == 0;
      self(self, b + 1);
      for (int a : inst.goods_of(b)) covered -= --hits[a] == 0;
      current.pop_back();
    }
  };
  visit(visit, 0);
  return make_solution(inst, ProblemKind::TwoPPM, std::move(best_s), std::move(best_m), "brute",
                       "exact");
}

// Optimal TwoPM solution. For each S the best W is found in two phases:
// a maximum matching of N(S) into B \ S, then extended to the other goods
// (augmenting never unmatches a good). Throws GuardError above 20 bidders.
inline Solution solve_brute_2pm(const BipartiteInstance& inst) {
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();
  if (nb > kBrute2pmMaxBidders) {
    throw GuardError("2PM enumeration limited to " + std::to_string(kBrute2pmMaxBidders) +
                     " bidders, got " + std::to_string(nb));
  }
  std::vector<char> allow_a(static_cast<std::size_t>(na));
  std::vector<char> allow_b(static_cast<std::size_t>(nb));
  std::vector<int> mate_a(static_cast<std::size_t>(na));
  std::vector<int> mate_b(static_cast<std::size_t>(nb));

  auto first_phase = [&](std::uint32_t mask) {
    std::fill(allow_a.begin(), allow_a.end(), 0);
    for (int b = 0; b < nb; ++b) {
      allow_b[b] = !(mask >> b & 1u);
      if (!allow_b[b]) {
        for (int a : inst.goods_of(b)) allow_a[a] = 1;
      }
    }
    std::fill(mate_a.begin(), mate_a.end(), -1);
    std::fill(mate_b.begin(), mate_b.end(), -1);
    detail::hopcroft_karp(inst, allow_a, allow_b, mate_a, mate_b);
    int matched = 0;
    for (int a = 0; a < na; ++a) matched += mate_a[a] != -1;
    return matched;
  };

  int best = -1;
  std::uint32_t best_mask = 0;
  std::vector<int> hits(static_cast<std::size_t>(na));
  for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
    std::fill(hits.begin(), hits.end(), 0);
    int upper = 0;
    for (int b = 0; b < nb; ++b) {
      if (!(mask >> b & 1u)) continue;
      for (int a : inst.goods_of(b)) upper += hits[a]++ == 0;
    }
    if (upper <= best) continue;
    const int value = first_phase(mask);
    if (value > best) {
      best = value;
      best_mask = mask;
    }
  }

  first_phase(best_mask);
  std::fill(allow_a.begin(), allow_a.end(), 1);
  detail::hopcroft_karp(inst, allow_a, allow_b, mate_a, mate_b);
  std::vector<int> s;
  for (int b = 0; b < nb; ++b) {
    if (best_mask >> b & 1u) s.push_back(b);
  }
  Solution sol = make_solution(inst, ProblemKind::TwoPM, std::move(s), detail::to_pairs(mate_a),
                               "brute", "exact");
  return sol;
}

}  // namespace spm
