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

// Exact solvers for instances where every bidder bids on two goods and every
// good receives d bids. Both start from a maximum matching M' of the
// auxiliary multigraph; its bidders B' cover 2|B'| goods with disjoint
// neighborhoods.
//
// d = 3: the optimum is n/2 + nu(G'). The rest of the bid graph H = G - B'
// splits into disjoint even cycles plus a forest; leaf-to-leaf paths are
// peeled off the forest, every cycle and path is matched internally, and the
// bidders left over join B'.
//
// d >= 4: every good can be covered. Goods outside N(B') are matched to
// distinct bidders shared with N(B'); those bidders join B'.

#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "spm/auxiliary.hpp"
#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/matching.hpp"
#include "spm/solution.hpp"

namespace spm {

// Intermediate structure of the d = 3 algorithm, kept for inspection.
struct Decomposition32 {
  AuxiliaryGraph auxiliary;
  std::vector<int> matched_bidders;                // B', ascending
  std::vector<std::vector<BidEdge>> cycles;        // edges in cycle order
  std::vector<std::vector<BidEdge>> paths;         // edges from one leaf to the other
  std::vector<int> dropped_endpoints;              // one bidder per path
  BipartiteMatching allocation;                    // A-perfect, avoids the chosen S
  std::vector<int> s_set;                          // ascending
};

namespace detail {

// The bid graph minus a set of bidders, as an undirected graph whose nodes
// are goods 0..na-1 followed by bidders na..na+nb-1. Edges can be deleted.
class ResidualGraph {
 public:
  ResidualGraph(const BipartiteInstance& inst, const std::vector<char>& removed_bidder)
      : na_(inst.num_goods()), inc_(static_cast<std::size_t>(inst.num_goods() + inst.num_bidders())) {
    for (int b = 0; b < inst.num_bidders(); ++b) {
      if (removed_bidder[b]) continue;
      for (int a : inst.goods_of(b)) {
        const int id = static_cast<int>(ends_.size());
        ends_.push_back({a, na_ + b});
        alive_.push_back(1);
        inc_[a].push_back(id);
        inc_[na_ + b].push_back(id);
      }
    }
    degree_.assign(inc_.size(), 0);
    for (std::size_t v = 0; v < inc_.size(); ++v) degree_[v] = static_cast<int>(inc_[v].size());
  }

  int num_nodes() const { return static_cast<int>(inc_.size()); }
  bool is_good(int v) const { return v < na_; }
  int bidder(int v) const { return v - na_; }
  int degree(int v) const { return degree_[v]; }
  int other(int e, int v) const { return ends_[e].first == v ? ends_[e].second : ends_[e].first; }
  bool alive(int e) const { return alive_[e] != 0; }

  std::vector<int> live_neighbors(int v) const {
    std::vector<int> out;
    for (int e : inc_[v]) {
      if (alive_[e]) out.push_back(other(e, v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void kill(int e) {
    if (!alive_[e]) return;
    alive_[e] = 0;
    --degree_[ends_[e].first];
    --degree_[ends_[e].second];
  }

  void isolate(int v) {
    for (int e : inc_[v]) kill(e);
  }

  BidEdge as_bid_edge(int u, int v) const {
    return is_good(u) ? BidEdge{u, bidder(v)} : BidEdge{v, bidder(u)};
  }

  // Any cycle among live edges as its node sequence, or empty if acyclic.
  // Deterministic: DFS from the lowest node, neighbors in incidence order.
  std::vector<int> find_cycle() const {
    const int n = num_nodes();
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
      if (state[s] != 0 || degree_[s] == 0) continue;
      std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
      state[s] = 1;
      while (!stack.empty()) {
        const int v = stack.back().first;
        std::size_t& pos = stack.back().second;
        if (pos == inc_[v].size()) {
          state[v] = 2;
          stack.pop_back();
          continue;
        }
        const int e = inc_[v][pos++];
        if (!alive_[e] || e == parent_edge[v]) continue;
        const int w = other(e, v);
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          parent_edge[w] = e;
          stack.push_back({w, 0});
        } else if (state[w] == 1) {
          std::vector<int> cycle;
          for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
          cycle.push_back(w);
          return cycle;
        }
      }
    }
    return {};
  }

  int edge_between(int u, int v) const {
    for (int e : inc_[u]) {
      if (alive_[e] && other(e, u) == v) return e;
    }
    return -1;
  }

  // Nodes of the live component containing `root`, ascending.
  std::vector<int> component(int root) const {
    std::vector<char> seen(static_cast<std::size_t>(num_nodes()), 0);
    std::vector<int> out{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int w : live_neighbors(out[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // The unique live path from `from` to `to` in a forest.
  std::vector<int> tree_path(int from, int to) const {
    std::vector<int> parent(static_cast<std::size_t>(num_nodes()), -2);
    std::queue<int> q;
    q.push(from);
    parent[from] = -1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (v == to) break;
      for (int w : live_neighbors(v)) {
        if (parent[w] == -2) {
          parent[w] = v;
          q.push(w);
        }
      }
    }
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  int na_;
  std::vector<std::vector<int>> inc_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<char> alive_;
  std::vector<int> degree_;
};

inline std::vector<int> matched_bidders(const AuxiliaryGraph& aux) {
  std::vector<int> out;
  for (int e : max_matching_general(aux.graph)) out.push_back(aux.bidder_of_edge[e]);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_biregular(const BipartiteInstance& inst, int d_goods, const char* what) {
  for (int b = 0; b < inst.num_bidders(); ++b) {
    if (inst.degree_of_bidder(b) != 2) {
      throw PreconditionError(std::string(what) + ": bidder " + std::to_string(b + 1) +
                              " has degree " + std::to_string(inst.degree_of_bidder(b)) +
                              ", expected 2");
    }
  }
  for (int a = 0; a < inst.num_goods(); ++a) {
    if (inst.degree_of_good(a) != d_goods) {
      throw PreconditionError(std::string(what) + ": good " + std::to_string(a + 1) +
                              " has degree " + std::to_string(inst.degree_of_good(a)) +
                              ", expected " + std::to_string(d_goods));
    }
  }
}

// A leaf bidder of the peeled forest has one good inside A \ N(B') and one
// inside N(B'); its forest neighbor is the latter.
inline void check_forest_leaf(const BipartiteInstance& inst, const ResidualGraph& h,
                              const std::vector<char>& covered, int leaf) {
  SPM_ENSURE(!h.is_good(leaf), "forest leaf is a good");
  int uncovered = 0;
  for (int a : inst.goods_of(h.bidder(leaf))) uncovered += !covered[a];
  SPM_ENSURE(uncovered == 1, "forest leaf without exactly one uncovered good");
  const std::vector<int> live = h.live_neighbors(leaf);
  SPM_ENSURE(live.size() == 1 && covered[live[0]], "forest neighbor of a leaf outside N(B')");
}

}  // namespace detail

// Runs the d = 3 construction and returns every intermediate object.
// Throws PreconditionError unless goods have degree 3 and bidders degree 2.
inline Decomposition32 decompose_32_regular(const BipartiteInstance& inst) {
  detail::require_biregular(inst, 3, "(3,2)-regular solver");
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();

  Decomposition32 out;
  out.auxiliary = build_auxiliary_graph(inst);
  out.matched_bidders = detail::matched_bidders(out.auxiliary);
  const int nu = static_cast<int>(out.matched_bidders.size());

  std::vector<char> in_bprime(static_cast<std::size_t>(nb), 0);
  std::vector<char> covered(static_cast<std::size_t>(na), 0);  // N(B')
  for (int b : out.matched_bidders) {
    in_bprime[b] = 1;
    for (int a : inst.goods_of(b)) {
      SPM_ENSURE(!covered[a], "matched bidders share a good");
      covered[a] = 1;
    }
  }

  // Bidders outside B' with both goods uncovered would extend M'.
  auto uncovered_goods_of = [&](int b) {
    int k = 0;
    for (int a : inst.goods_of(b)) k += !covered[a];
    return k;
  };
  for (int b = 0; b < nb; ++b) {
    if (!in_bprime[b]) SPM_ENSURE(uncovered_goods_of(b) <= 1, "auxiliary matching not maximum");
  }

  detail::ResidualGraph h(inst, in_bprime);
  const int nodes = h.num_nodes();

  // Peel edge-disjoint cycles until the rest is a forest. With maximum
  // degree 3 they are automatically vertex-disjoint.
  std::vector<int> owner(static_cast<std::size_t>(na), -1);  // cycle/path id per good
  int pieces = 0;
  std::vector<std::vector<int>> cycle_nodes;
  for (std::vector<int> c = h.find_cycle(); !c.empty(); c = h.find_cycle()) {
    SPM_ENSURE(c.size() % 2 == 0, "odd cycle in a bipartite graph");
    std::vector<BidEdge> edges;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int u = c[i];
      const int v = c[(i + 1) % c.size()];
      const int e = h.edge_between(u, v);
      SPM_ENSURE(e >= 0, "cycle edge missing");
      edges.push_back(h.as_bid_edge(u, v));
      h.kill(e);
      if (h.is_good(u)) {
        SPM_ENSURE(owner[u] == -1, "cycles share a good");
        owner[u] = pieces;
      }
    }
    ++pieces;
    out.cycles.push_back(std::move(edges));
    cycle_nodes.push_back(std::move(c));
  }

  // Leaves of the forest are degree-3 goods sitting on a cycle; drop them.
  std::vector<int> forest_leaves;
  for (int v = 0; v < nodes; ++v) {
    if (h.degree(v) != 1) continue;
    SPM_ENSURE(h.is_good(v) && !covered[v], "forest leaf outside A \\ N(B')");
    SPM_ENSURE(owner[v] != -1, "forest leaf not on a cycle");
    forest_leaves.push_back(v);
  }
  for (int v : forest_leaves) h.isolate(v);
  for (int v = 0; v < nodes; ++v) {
    if (h.degree(v) == 1) detail::check_forest_leaf(inst, h, covered, v);
  }

  // Peel leaf-to-leaf paths, always from the tree holding the lowest node.
  std::vector<std::vector<int>> path_nodes;
  for (;;) {
    int root = -1;
    for (int v = 0; v < nodes && root == -1; ++v) {
      if (h.degree(v) > 0) root = v;
    }
    if (root == -1) break;
    std::vector<int> leaves;
    for (int v : h.component(root)) {
      if (h.degree(v) == 1) leaves.push_back(v);
    }
    SPM_ENSURE(leaves.size() >= 2, "tree without two leaves");
    for (int v : leaves) SPM_ENSURE(!h.is_good(v), "path endpoint is a good");
    std::vector<int> path = h.tree_path(leaves[0], leaves[1]);

    std::vector<int> before(static_cast<std::size_t>(na));
    for (int a = 0; a < na; ++a) before[a] = h.degree(a);
    std::vector<BidEdge> edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back(h.as_bid_edge(path[i], path[i + 1]));
    std::vector<char> on_path(static_cast<std::size_t>(nodes), 0);
    for (int v : path) {
      on_path[v] = 1;
      if (h.is_good(v)) {
        SPM_ENSURE(owner[v] == -1, "good on two pieces");
        owner[v] = pieces;
      }
    }
    for (int v : path) h.isolate(v);
    for (int a = 0; a < na; ++a) {
      if (!on_path[a]) SPM_ENSURE(h.degree(a) == before[a], "path removal changed a good's degree");
    }
    for (int v = 0; v < nodes; ++v) {
      if (h.degree(v) == 1) detail::check_forest_leaf(inst, h, covered, v);
    }
    ++pieces;
    out.paths.push_back(std::move(edges));
    path_nodes.push_back(std::move(path));
  }
  for (int a = 0; a < na; ++a) SPM_ENSURE(owner[a] != -1, "good in no cycle or path");

  // Match inside every piece.
  std::vector<int> mate_b(static_cast<std::size_t>(nb), -1);
  auto match = [&](int good_node, int bidder_node) {
    const int b = h.bidder(bidder_node);
    SPM_ENSURE(mate_b[b] == -1, "bidder used twice");
    mate_b[b] = good_node;
    out.allocation.push_back({good_node, b});
  };
  for (const std::vector<int>& c : cycle_nodes) {
    const int len = static_cast<int>(c.size());
    int start = -1;
    for (int i = 0; i < len; ++i) {
      if (h.is_good(c[i]) && (start == -1 || c[i] < c[start])) start = i;
    }
    const int next = c[(start + 1) % len];
    const int prev = c[(start - 1 + len) % len];
    const int step = next < prev ? 1 : -1;
    for (int k = 0; k < len / 2; ++k) {
      const int i = ((start + 2 * k * step) % len + len) % len;
      match(c[i], c[((i + step) % len + len) % len]);
    }
  }
  for (const std::vector<int>& p : path_nodes) {
    const bool drop_front = p.front() < p.back();
    out.dropped_endpoints.push_back(h.bidder(drop_front ? p.front() : p.back()));
    for (std::size_t i = 1; i + 1 < p.size(); i += 2) match(p[i], drop_front ? p[i + 1] : p[i - 1]);
  }
  std::sort(out.allocation.begin(), out.allocation.end());
  SPM_ENSURE(static_cast<int>(out.allocation.size()) == na, "allocation not A-perfect");

  for (int b = 0; b < nb; ++b) {
    if (mate_b[b] == -1) out.s_set.push_back(b);
  }

  // No uncovered good sees two of the extra bidders.
  std::vector<int> extra_hits(static_cast<std::size_t>(na), 0);
  for (int b : out.s_set) {
    if (in_bprime[b]) continue;
    for (int a : inst.goods_of(b)) {
      if (!covered[a]) SPM_ENSURE(++extra_hits[a] <= 1, "good with two extra second-price bidders");
    }
  }
  SPM_ENSURE(coverage(inst, out.s_set) == na / 2 + nu, "profit differs from n/2 + nu(G')");
  return out;
}

// Optimal for TwoPPM; for TwoPM the same sets are a 9/10-approximation.
inline Solution solve_32_regular(const BipartiteInstance& inst,
                                 ProblemKind kind = ProblemKind::TwoPPM) {
  Decomposition32 d = decompose_32_regular(inst);
  return make_solution(inst, kind, std::move(d.s_set), std::move(d.allocation), "32regular",
                       kind == ProblemKind::TwoPPM ? "exact" : "9/10");
}

namespace detail {

// Extends the matched bidders B' to a set covering every good, for d >= 4.
inline std::vector<int> cover_all_goods(const BipartiteInstance& inst,
                                        const std::vector<int>& bprime) {
  const int na = inst.num_goods();
  const int nb = inst.num_bidders();
  std::vector<char> in_bprime(static_cast<std::size_t>(nb), 0);
  std::vector<char> covered(static_cast<std::size_t>(na), 0);
  for (int b : bprime) {
    in_bprime[b] = 1;
    for (int a : inst.goods_of(b)) covered[a] = 1;
  }

  // Bipartite graph between uncovered goods and covered goods; the edge for
  // a pair is the smallest bidder adjacent to both.
  std::vector<int> uncovered_index(static_cast<std::size_t>(na), -1);
  std::vector<int> covered_index(static_cast<std::size_t>(na), -1);
  std::vector<int> uncovered_goods, covered_goods;
  for (int a = 0; a < na; ++a) {
    if (covered[a]) {
      covered_index[a] = static_cast<int>(covered_goods.size());
      covered_goods.push_back(a);
    } else {
      uncovered_index[a] = static_cast<int>(uncovered_goods.size());
      uncovered_goods.push_back(a);
    }
  }
  std::map<std::pair<int, int>, int> label;
  for (int b = 0; b < nb; ++b) {
    if (in_bprime[b]) continue;
    const auto& g = inst.goods_of(b);
    const int free_count = !covered[g[0]] + !covered[g[1]];
    SPM_ENSURE(free_count <= 1, "uncovered goods share a bidder");
    if (free_count == 0) continue;
    const int u = covered[g[0]] ? g[1] : g[0];
    const int c = covered[g[0]] ? g[0] : g[1];
    label.try_emplace({uncovered_index[u], covered_index[c]}, b);
  }
  std::vector<BidEdge> edges;
  for (const auto& [key, b] : label) edges.push_back({key.first, key.second});
  const BipartiteInstance shared(static_cast<int>(uncovered_goods.size()),
                                 static_cast<int>(covered_goods.size()), edges);
  const BipartiteMatching m = max_matching_bipartite(shared);
  SPM_ENSURE(m.size() == uncovered_goods.size(), "no matching saturating the uncovered goods");

  std::vector<int> s = bprime;
  for (const BidEdge& e : m) s.push_back(label.at({e.a, e.b}));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

// Optimal for both TwoPM and TwoPPM when goods have degree d >= 4 and
// bidders degree 2: every good ends up with a second-price bidder.
inline Solution solve_d2_regular_d4(const BipartiteInstance& inst,
                                    ProblemKind kind = ProblemKind::TwoPPM) {
  const int na = inst.num_goods();
  const int d = na > 0 ? inst.degree_of_good(0) : 4;
  if (d < 4) {
    throw PreconditionError("(d,2)-regular solver needs d >= 4, good 1 has degree " +
                            std::to_string(d));
  }
  detail::require_biregular(inst, d, "(d,2)-regular solver");
  const AuxiliaryGraph aux = build_auxiliary_graph(inst);
  std::vector<int> s = detail::cover_all_goods(inst, detail::matched_bidders(aux));
  SPM_ENSURE(static_cast<int>(s.size()) <= inst.num_bidders() - na, "second-price set too large");
  std::optional<BipartiteMatching> m = a_perfect_matching(inst, s);
  SPM_ENSURE(m.has_value(), "no A-perfect matching after removing S");
  Solution sol = make_solution(inst, kind, std::move(s), std::move(*m), "d2regular", "exact");
  SPM_ENSURE(sol.profit == na, "some good left without a second-price bidder");
  return sol;
}

}  // namespace spm
