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

#include <initializer_list>
#include <utility>
#include <vector>

#include "spm/graph.hpp"

namespace spm::fixtures {

// Builds an instance from 1-based (good, bidder) pairs.
inline BipartiteInstance from_pairs(int na, int nb, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<BidEdge> edges;
  for (auto [a, b] : pairs) edges.push_back({a - 1, b - 1});
  return BipartiteInstance(na, nb, edges);
}

inline std::vector<int> zero_based(std::initializer_list<int> ids) {
  std::vector<int> out;
  for (int x : ids) out.push_back(x - 1);
  return out;
}

// Introductory example: 6 goods, 9 bidders.
inline BipartiteInstance intro_example() {
  return from_pairs(6, 9,
                    {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {6, 8}, {4, 8}, {6, 9},
                     {3, 7}, {5, 9}, {2, 1}, {6, 5}, {3, 4}, {5, 7}, {4, 7}, {2, 4}, {1, 4},
                     {2, 5}});
}

// The matching drawn for the introductory example, with S = {b4, b6, b7}.
inline std::vector<BidEdge> intro_matching() {
  return {{0, 0}, {1, 1}, {2, 2}, {3, 7}, {4, 4}, {5, 8}};
}

// a1, a2 each adjacent to b1, b2, b3.
inline BipartiteInstance complete_2x3() {
  return from_pairs(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
}

// Three goods; b1:{a1,a2}, b2:{a1,a2}, b3:{a1,a3}, b4:{a2,a3}.
inline BipartiteInstance pair_bidders_example() {
  return from_pairs(3, 4, {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}, {2, 4}, {3, 4}});
}

// (4,2)-regular example on three goods; b5:{a1,a3}, b6:{a2,a3} added.
inline BipartiteInstance four_regular_example() {
  return from_pairs(3, 6,
                    {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}, {2, 4}, {3, 4}, {1, 5},
                     {3, 5}, {2, 6}, {3, 6}});
}

// Path a1-b1, a1-b2, a2-b2, a2-b3.
inline BipartiteInstance short_path() { return from_pairs(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}); }

inline Multigraph triangle() {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

}  // namespace spm::fixtures
