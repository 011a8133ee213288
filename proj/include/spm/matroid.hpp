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
#include <span>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/matching.hpp"

namespace spm {

// Transversal matroid on the bidders: I is independent iff some matching
// covers every bidder of I. Its dual holds exactly the feasible
// second-price sets: S is dual-independent iff A can be saturated from B \ S.
//
// Stateless apart from the instance reference, so concurrent queries are safe.
class TransversalMatroidOracle {
 public:
  explicit TransversalMatroidOracle(const BipartiteInstance& inst) : inst_(&inst) {}

  const BipartiteInstance& instance() const { return *inst_; }

  // Size of a maximum matching using only bidders from `subset`.
  int rank(std::span<const int> subset) const {
    const std::vector<char> allow_b = detail::bidder_mask(*inst_, subset, 1);
    const std::vector<char> allow_a(static_cast<std::size_t>(inst_->num_goods()), 1);
    std::vector<int> mate_a(static_cast<std::size_t>(inst_->num_goods()), -1);
    std::vector<int> mate_b(static_cast<std::size_t>(inst_->num_bidders()), -1);
    detail::hopcroft_karp(*inst_, allow_a, allow_b, mate_a, mate_b);
    return static_cast<int>(std::count_if(mate_a.begin(), mate_a.end(), [](int b) { return b != -1; }));
  }

  bool is_independent(std::span<const int> subset) const {
    return rank(subset) == static_cast<int>(unique_count(subset));
  }

  bool is_dual_independent(std::span<const int> s_set) const {
    return a_perfect_matching(*inst_, s_set).has_value();
  }

  // A maximal dual-independent set built greedily along `order`: each bidder
  // is kept when the set stays dual-independent. Visiting bidders by
  // decreasing weight yields a maximum-weight set (matroid greedy).
  std::vector<int> greedy_dual_basis(std::span<const int> order) const {
    IncrementalAllocation alloc(*inst_);
    for (int b : order) alloc.try_forbid(b);
    return alloc.forbidden_set();
  }

  // Maximum-weight dual-independent set; ties between equal weights are
  // broken by ascending bidder index. Throws PreconditionError when A
  // cannot be saturated at all.
  template <typename Weight>
  std::vector<int> max_weight_dual_independent(std::span<const Weight> weights) const {
    if (static_cast<int>(weights.size()) != inst_->num_bidders()) {
      throw InputError("expected one weight per bidder");
    }
    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return weights[x] > weights[y]; });
    return greedy_dual_basis(order);
  }

  std::vector<int> max_weight_dual_independent(const std::vector<int>& weights) const {
    for (int w : weights) {
      if (w < 0) throw InputError("weights must be nonnegative");
    }
    return max_weight_dual_independent(std::span<const int>(weights));
  }

 private:
  static std::size_t unique_count(std::span<const int> subset) {
    std::vector<int> v(subset.begin(), subset.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  }

  const BipartiteInstance* inst_;
};

}  // namespace spm
