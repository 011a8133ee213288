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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spm/matroid.hpp"

namespace spm {
namespace {

using fixtures::zero_based;

TEST(Transversal, Independence) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  const TransversalMatroidOracle oracle(inst);
  EXPECT_TRUE(oracle.is_independent(std::vector<int>{}));
  EXPECT_TRUE(oracle.is_independent(std::vector<int>{2}));
  EXPECT_TRUE(oracle.is_independent(std::vector<int>{0, 2}));
  EXPECT_FALSE(oracle.is_independent(std::vector<int>{0, 1, 2}));
  EXPECT_EQ(oracle.rank(std::vector<int>{0, 1, 2}), 2);
}

TEST(Transversal, IsolatedBidderIsDependent) {
  const BipartiteInstance inst = fixtures::from_pairs(1, 2, {{1, 1}});
  const TransversalMatroidOracle oracle(inst);
  EXPECT_FALSE(oracle.is_independent(std::vector<int>{1}));
}

TEST(DualMatroid, CompleteTwoByThree) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  const TransversalMatroidOracle oracle(inst);
  EXPECT_TRUE(oracle.is_dual_independent(std::vector<int>{}));
  for (int b = 0; b < 3; ++b) EXPECT_TRUE(oracle.is_dual_independent(std::vector<int>{b}));
  EXPECT_FALSE(oracle.is_dual_independent(std::vector<int>{0, 1}));
  EXPECT_FALSE(oracle.is_dual_independent(std::vector<int>{0, 2}));
  EXPECT_FALSE(oracle.is_dual_independent(std::vector<int>{1, 2}));
}

TEST(DualMatroid, IntroExample) {
  const BipartiteInstance inst = fixtures::intro_example();
  const TransversalMatroidOracle oracle(inst);
  EXPECT_TRUE(oracle.is_dual_independent(zero_based({4, 6, 7})));
  EXPECT_EQ(oracle.rank(zero_based({1, 2, 3, 4, 5, 6, 7, 8, 9})), 6);
}

TEST(DualMatroid, RankIsSubmodularAndMonotone) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteInstance inst = oracle::random_instance(5, 10, 0.25, rng);
    const TransversalMatroidOracle oracle(inst);
    EXPECT_EQ(oracle.rank(zero_based({1, 2, 3, 4, 5, 6, 7, 8, 9, 10})), 5);
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<int> s, t, u, i;
      for (int b = 0; b < 10; ++b) {
        const bool in_s = rng() % 2, in_t = rng() % 2;
        if (in_s) s.push_back(b);
        if (in_t) t.push_back(b);
        if (in_s || in_t) u.push_back(b);
        if (in_s && in_t) i.push_back(b);
      }
      EXPECT_GE(oracle.rank(s) + oracle.rank(t), oracle.rank(u) + oracle.rank(i));
      EXPECT_LE(oracle.rank(s), oracle.rank(u));
    }
  }
}

TEST(MaxWeightDual, TieBreakByIndex) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  const TransversalMatroidOracle oracle(inst);
  EXPECT_EQ(oracle.max_weight_dual_independent(std::vector<int>{2, 2, 2}), (std::vector<int>{0}));
  EXPECT_EQ(oracle.max_weight_dual_independent(std::vector<int>{1, 3, 2}), (std::vector<int>{1}));
}

TEST(MaxWeightDual, ZeroWeightsStillMaximal) {
  const BipartiteInstance inst = fixtures::intro_example();
  const TransversalMatroidOracle oracle(inst);
  const std::vector<int> s = oracle.max_weight_dual_independent(std::vector<int>(9, 0));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(oracle.is_dual_independent(s));
}

TEST(MaxWeightDual, RejectsNegativeWeights) {
  const TransversalMatroidOracle oracle(fixtures::complete_2x3());
  EXPECT_THROW(oracle.max_weight_dual_independent(std::vector<int>{1, -1, 0}), InputError);
  EXPECT_THROW(oracle.max_weight_dual_independent(std::vector<int>{1, 1}), InputError);
}

TEST(MaxWeightDual, OptimalAgainstEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int nb = 4 + static_cast<int>(rng() % 7);
    const int na = 1 + static_cast<int>(rng() % (nb - 1));
    const BipartiteInstance inst = oracle::random_instance(na, nb, 0.3, rng);
    const TransversalMatroidOracle oracle(inst);
    std::vector<int> w(static_cast<std::size_t>(nb));
    for (int& x : w) x = static_cast<int>(rng() % 5);
    const std::vector<int> s = oracle.max_weight_dual_independent(w);
    ASSERT_TRUE(oracle.is_dual_independent(s));
    int got = 0;
    for (int b : s) got += w[b];
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << nb); ++mask) {
      if (oracle::kuhn(inst, oracle::all_bits(na), oracle::all_bits(nb) & ~mask) != na) continue;
      int total = 0;
      for (int b = 0; b < nb; ++b) {
        if (mask >> b & 1u) total += w[b];
      }
      best = std::max(best, total);
    }
    EXPECT_EQ(got, best);
    // Every dual basis has n_b - n_a elements.
    EXPECT_EQ(static_cast<int>(s.size()), nb - na);
  }
}

}  // namespace
}  // namespace spm
