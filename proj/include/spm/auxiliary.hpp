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

#include <stdexcept>
#include <string>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"

// Internal consistency check that stays on in release builds. A failure
// means a bug in the library, not bad input.
#define SPM_ENSURE(cond, msg)                                                        \
  do {                                                                               \
    if (!(cond)) throw std::logic_error(std::string("internal check failed: ") + (msg)); \
  } while (0)

namespace spm {

// When every bidder has exactly two goods, each bidder b is an edge e_b
// between its two goods. The result is a multigraph on A with one edge per
// bidder; `bidder_of_edge[e]` maps an edge id back to its bidder.
struct AuxiliaryGraph {
  Multigraph graph;
  std::vector<int> bidder_of_edge;
};

inline AuxiliaryGraph build_auxiliary_graph(const BipartiteInstance& inst) {
  AuxiliaryGraph aux{Multigraph(inst.num_goods()), {}};
  aux.bidder_of_edge.reserve(static_cast<std::size_t>(inst.num_bidders()));
  for (int b = 0; b < inst.num_bidders(); ++b) {
    const auto& goods = inst.goods_of(b);
    if (goods.size() != 2) {
      throw PreconditionError("bidder " + std::to_string(b + 1) + " has degree " +
                              std::to_string(goods.size()) + ", expected 2");
    }
    aux.graph.add_edge(goods[0], goods[1]);
    aux.bidder_of_edge.push_back(b);
  }
  return aux;
}

}  // namespace spm
