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

// Solvers for general TwoPPM inputs. All of them pick S among the
// independent sets of the dual transversal matroid and maximize the
// coverage |N(S)|, which is monotone submodular.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spm/auxiliary.hpp"
#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/matching.hpp"
#include "spm/matroid.hpp"
#include "spm/random.hpp"
#include "spm/solution.hpp"

namespace spm {

// Exact when every good has exactly two bidders: then no good can have two
// neighbors in a feasible S, so |N(S)| is the sum of deg(b) over S and the
// problem is a maximum-weight independent set of the dual matroid.
inline Solution solve_a2(const BipartiteInstance& inst, ProblemKind kind = ProblemKind::TwoPPM) {
  for (int a = 0; a < inst.num_goods(); ++a) {
    if (inst.degree_of_good(a) != 2) {
      throw PreconditionError("deg(a)=2 solver: good " + std::to_string(a + 1) + " has degree " +
                              std::to_string(inst.degree_of_good(a)));
    }
  }
  std::vector<int> weights(static_cast<std::size_t>(inst.num_bidders()));
  for (int b = 0; b < inst.num_bidders(); ++b) weights[b] = inst.degree_of_bidder(b);
  const TransversalMatroidOracle oracle(inst);
  std::vector<int> s = oracle.max_weight_dual_independent(weights);
  int total = 0;
  for (int b : s) total += weights[b];
  std::optional<BipartiteMatching> m = a_perfect_matching(inst, s);
  SPM_ENSURE(m.has_value(), "greedy set is not dual-independent");
  Solution sol = make_solution(inst, kind, std::move(s), std::move(*m), "a2",
                               kind == ProblemKind::TwoPPM ? "exact" : "heuristic");
  SPM_ENSURE(sol.profit == total, "coverage differs from the degree sum");
  return sol;
}

struct DegreeGapResult {
  Solution solution;
  int min_good_degree = 0;    // d_A
  int max_bidder_degree = 0;  // d_B
  double certificate = 0.0;   // (1 - d_B / d_A) * n_a
};

// Any S of size n_b - n_a leaving an A-perfect matching covers at least
// (1 - d_B/d_A) n_a goods. S is the set of bidders left unmatched by a
// maximum matching.
inline DegreeGapResult degree_gap_solution(const BipartiteInstance& inst,
                                           ProblemKind kind = ProblemKind::TwoPPM) {
  std::optional<BipartiteMatching> m = a_perfect_matching(inst);
  if (!m) throw PreconditionError("instance has no A-perfect matching");
  std::vector<char> used(static_cast<std::size_t>(inst.num_bidders()), 0);
  for (const BidEdge& e : *m) used[e.b] = 1;
  std::vector<int> s;
  for (int b = 0; b < inst.num_bidders(); ++b) {
    if (!used[b]) s.push_back(b);
  }
  DegreeGapResult r;
  const DegreeProfile p = degree_profile(inst);
  r.min_good_degree = p.min_good;
  r.max_bidder_degree = p.max_bidder;
  if (inst.num_goods() > 0) {
    r.certificate = (1.0 - static_cast<double>(p.max_bidder) / p.min_good) * inst.num_goods();
  }
  r.solution = make_solution(inst, kind, std::move(s), std::move(*m), "degree-gap", "1-dB/dA");
  return r;
}

// Classic greedy: repeatedly add the feasible bidder with the largest
// marginal coverage (lowest index on ties) until the set is maximal.
inline Solution solve_greedy(const BipartiteInstance& inst, ProblemKind kind = ProblemKind::TwoPPM) {
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();
  IncrementalAllocation alloc(inst);
  std::vector<char> covered(static_cast<std::size_t>(na), 0);
  // Dual-independent sets are downward closed: once infeasible, always infeasible.
  std::vector<char> dead(static_cast<std::size_t>(nb), 0);
  std::vector<int> order;
  for (;;) {
    order.clear();
    std::vector<int> margin(static_cast<std::size_t>(nb), 0);
    for (int b = 0; b < nb; ++b) {
      if (dead[b] || alloc.is_forbidden(b)) continue;
      for (int a : inst.goods_of(b)) margin[b] += !covered[a];
      order.push_back(b);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return margin[x] > margin[y]; });
    bool added = false;
    for (int b : order) {
      if (alloc.try_forbid(b)) {
        for (int a : inst.goods_of(b)) covered[a] = 1;
        added = true;
        break;
      }
      dead[b] = 1;
    }
    if (!added) break;
  }
  return make_solution(inst, kind, alloc.forbidden_set(), alloc.matching(), "greedy",
                       kind == ProblemKind::TwoPPM ? "1/2-greedy" : "heuristic");
}

struct ContinuousGreedyParams {
  int steps = 50;
  int samples = 64;
  std::uint64_t seed = 0;
};

namespace detail {

inline bool dual_independent(const BipartiteInstance& inst, const std::vector<int>& s) {
  return a_perfect_matching(inst, s).has_value();
}

inline std::vector<int> swapped(const std::vector<int>& set, int out, int in) {
  std::vector<int> r;
  r.reserve(set.size());
  for (int x : set) {
    if (x != out) r.push_back(x);
  }
  r.push_back(in);
  std::sort(r.begin(), r.end());
  return r;
}

// Randomly merges two bases of the dual matroid carrying weights
// `weight_c` and `weight_d` by symmetric exchanges until they coincide.
inline std::vector<int> merge_bases(const BipartiteInstance& inst, std::vector<int> c, double weight_c,
                                    std::vector<int> d, double weight_d, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> c_only, d_only;
    std::set_difference(c.begin(), c.end(), d.begin(), d.end(), std::back_inserter(c_only));
    std::set_difference(d.begin(), d.end(), c.begin(), c.end(), std::back_inserter(d_only));
    if (c_only.empty()) return c;
    const int i = c_only.front();
    int j = -1;
    for (int cand : d_only) {
      if (dual_independent(inst, swapped(c, i, cand)) && dual_independent(inst, swapped(d, cand, i))) {
        j = cand;
        break;
      }
    }
    SPM_ENSURE(j != -1, "no symmetric exchange between bases");
    if (unit_real(rng) * (weight_c + weight_d) < weight_c) {
      d = swapped(d, j, i);
    } else {
      c = swapped(c, i, j);
    }
  }
}

}  // namespace detail

// Continuous greedy on the multilinear extension of |N(.)| over the dual
// matroid polytope, with marginals estimated by sampling, followed by swap
// rounding of the resulting convex combination of bases. Reproducible for a
// fixed seed; the output is always a dual-independent set.
inline Solution solve_continuous_greedy(const BipartiteInstance& inst,
                                        const ContinuousGreedyParams& params = {},
                                        ProblemKind kind = ProblemKind::TwoPPM) {
  if (params.steps < 1 || params.samples < 1) {
    throw InputError("continuous greedy needs steps >= 1 and samples >= 1");
  }
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();
  if (!a_perfect_matching(inst)) throw PreconditionError("instance has no A-perfect matching");

  const TransversalMatroidOracle oracle(inst);
  std::mt19937_64 rng(params.seed);
  std::vector<double> x(static_cast<std::size_t>(nb), 0.0);
  std::vector<std::vector<int>> bases;
  const double dt = 1.0 / params.steps;

  std::vector<char> in_sample(static_cast<std::size_t>(nb));
  std::vector<char> covered(static_cast<std::size_t>(na));
  for (int t = 0; t < params.steps; ++t) {
    std::vector<double> gain(static_cast<std::size_t>(nb), 0.0);
    for (int r = 0; r < params.samples; ++r) {
      std::fill(covered.begin(), covered.end(), 0);
      for (int b = 0; b < nb; ++b) {
        in_sample[b] = unit_real(rng) < x[b];
        if (in_sample[b]) {
          for (int a : inst.goods_of(b)) covered[a] = 1;
        }
      }
      for (int b = 0; b < nb; ++b) {
        if (in_sample[b]) continue;
        int fresh = 0;
        for (int a : inst.goods_of(b)) fresh += !covered[a];
        gain[b] += fresh;
      }
    }
    std::vector<int> base = oracle.max_weight_dual_independent(std::span<const double>(gain));
    for (int b : base) x[b] += dt;
    bases.push_back(std::move(base));
  }

  std::vector<int> s = bases.front();
  for (std::size_t k = 1; k < bases.size(); ++k) {
    s = detail::merge_bases(inst, std::move(s), static_cast<double>(k), bases[k], 1.0, rng);
  }
  std::optional<BipartiteMatching> m = a_perfect_matching(inst, s);
  SPM_ENSURE(m.has_value(), "rounded set is not dual-independent");
  return make_solution(inst, kind, std::move(s), std::move(*m), "cg",
                       kind == ProblemKind::TwoPPM ? "cg-sampled" : "heuristic");
}

}  // namespace spm
