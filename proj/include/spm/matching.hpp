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
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"

namespace spm {

namespace detail {

// Edmonds' blossom algorithm on a simple graph, one BFS per free root.
// O(V^3). Adjacency lists must be sorted for reproducible output.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())),
        adj_(std::move(adj)),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_, 0),
        used_(n_, 0),
        in_blossom_(n_, 0) {}

  const std::vector<int>& run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

// Augments (mate_a, mate_b) to a maximum matching between the allowed goods
// and the allowed bidders (Hopcroft-Karp). Goods matched on entry stay matched.
inline void hopcroft_karp(const BipartiteInstance& inst, const std::vector<char>& allow_a,
                          const std::vector<char>& allow_b, std::vector<int>& mate_a,
                          std::vector<int>& mate_b) {
  const int na = inst.num_goods();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(na));
  std::vector<std::size_t> next(static_cast<std::size_t>(na));

  auto bfs = [&]() {
    std::queue<int> q;
    for (int a = 0; a < na; ++a) {
      if (allow_a[a] && mate_a[a] == -1) {
        dist[a] = 0;
        q.push(a);
      } else {
        dist[a] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int b : inst.bidders_of(a)) {
        if (!allow_b[b]) continue;
        const int a2 = mate_b[b];
        if (a2 == -1) {
          found = true;
        } else if (dist[a2] == kInf) {
          dist[a2] = dist[a] + 1;
          q.push(a2);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS from a free good.
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    std::vector<int> via;  // bidder used to leave stack[i]
    while (!stack.empty()) {
      const int a = stack.back();
      const auto& nbrs = inst.bidders_of(a);
      bool advanced = false;
      while (next[a] < nbrs.size()) {
        const int b = nbrs[next[a]++];
        if (!allow_b[b]) continue;
        const int a2 = mate_b[b];
        if (a2 == -1) {
          via.push_back(b);
          for (std::size_t i = 0; i < stack.size(); ++i) {
            mate_a[stack[i]] = via[i];
            mate_b[via[i]] = stack[i];
          }
          return true;
        }
        if (dist[a2] == dist[a] + 1) {
          via.push_back(b);
          stack.push_back(a2);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[a] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next.begin(), next.end(), 0);
    for (int a = 0; a < na; ++a) {
      if (allow_a[a] && mate_a[a] == -1) dfs(a);
    }
  }
}

inline std::vector<char> bidder_mask(const BipartiteInstance& inst, std::span<const int> bidders,
                                     char value) {
  std::vector<char> mask(static_cast<std::size_t>(inst.num_bidders()), static_cast<char>(!value));
  for (int b : bidders) {
    if (b < 0 || b >= inst.num_bidders()) {
      throw InputError("bidder index " + std::to_string(b) + " out of range");
    }
    mask[b] = value;
  }
  return mask;
}

inline BipartiteMatching to_pairs(const std::vector<int>& mate_a) {
  BipartiteMatching m;
  for (int a = 0; a < static_cast<int>(mate_a.size()); ++a) {
    if (mate_a[a] != -1) m.push_back({a, mate_a[a]});
  }
  return m;
}

}  // namespace detail

// Maximum-cardinality matching of a multigraph. Parallel edges are collapsed;
// each matched pair is reported by the smallest edge id joining it.
inline GraphMatching max_matching_general(const Multigraph& g) {
  const int n = g.num_vertices();
  std::map<std::pair<int, int>, int> representative;
  for (const GraphEdge& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = representative.try_emplace({key.first, key.second}, e.id);
    if (!inserted) it->second = std::min(it->second, e.id);
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [key, id] : representative) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  const std::vector<int> mate = detail::BlossomMatcher(std::move(adj)).run();
  GraphMatching out;
  for (int v = 0; v < n; ++v) {
    if (mate[v] > v) out.push_back(representative.at({v, mate[v]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maximum matching between A and B \ forbidden_b, sorted by good.
inline BipartiteMatching max_matching_bipartite(const BipartiteInstance& inst,
                                                std::span<const int> forbidden_b = {}) {
  const std::vector<char> allow_b = detail::bidder_mask(inst, forbidden_b, 0);
  const std::vector<char> allow_a(static_cast<std::size_t>(inst.num_goods()), 1);
  std::vector<int> mate_a(static_cast<std::size_t>(inst.num_goods()), -1);
  std::vector<int> mate_b(static_cast<std::size_t>(inst.num_bidders()), -1);
  detail::hopcroft_karp(inst, allow_a, allow_b, mate_a, mate_b);
  return detail::to_pairs(mate_a);
}

// A matching saturating all of A that avoids forbidden_b, if one exists.
inline std::optional<BipartiteMatching> a_perfect_matching(const BipartiteInstance& inst,
                                                           std::span<const int> forbidden_b = {}) {
  BipartiteMatching m = max_matching_bipartite(inst, forbidden_b);
  if (static_cast<int>(m.size()) < inst.num_goods()) return std::nullopt;
  return m;
}

// An A-perfect matching that is updated as bidders get forbidden one at a
// time. Forbidding a matched bidder frees one good; one augmenting search
// from that good decides whether A can still be saturated.
class IncrementalAllocation {
 public:
  // Throws PreconditionError when no A-perfect matching exists.
  explicit IncrementalAllocation(const BipartiteInstance& inst)
      : inst_(&inst),
        mate_a_(static_cast<std::size_t>(inst.num_goods()), -1),
        mate_b_(static_cast<std::size_t>(inst.num_bidders()), -1),
        forbidden_(static_cast<std::size_t>(inst.num_bidders()), 0),
        seen_(static_cast<std::size_t>(inst.num_bidders()), 0) {
    const std::vector<char> all_a(static_cast<std::size_t>(inst.num_goods()), 1);
    const std::vector<char> all_b(static_cast<std::size_t>(inst.num_bidders()), 1);
    detail::hopcroft_karp(inst, all_a, all_b, mate_a_, mate_b_);
    if (std::find(mate_a_.begin(), mate_a_.end(), -1) != mate_a_.end()) {
      throw PreconditionError("instance has no A-perfect matching");
    }
  }

  bool is_forbidden(int b) const { return forbidden_[b] != 0; }
  bool is_saturated(int b) const { return mate_b_[b] != -1; }

  // Forbids b if A stays saturable; otherwise leaves the state untouched.
  bool try_forbid(int b) {
    if (forbidden_[b]) return true;
    const int a = mate_b_[b];
    forbidden_[b] = 1;
    if (a == -1) return true;
    mate_a_[a] = -1;
    mate_b_[b] = -1;
    if (augment_from(a)) return true;
    forbidden_[b] = 0;
    mate_a_[a] = b;
    mate_b_[b] = a;
    return false;
  }

  // Would forbidding b keep A saturable? Does not change the state.
  bool can_forbid(int b) {
    if (forbidden_[b] || mate_b_[b] == -1) return true;
    const std::vector<int> save_a = mate_a_;
    const std::vector<int> save_b = mate_b_;
    const bool ok = try_forbid(b);
    if (ok) {
      forbidden_[b] = 0;
      mate_a_ = save_a;
      mate_b_ = save_b;
    }
    return ok;
  }

  std::vector<int> forbidden_set() const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(forbidden_.size()); ++b) {
      if (forbidden_[b]) out.push_back(b);
    }
    return out;
  }

  BipartiteMatching matching() const { return detail::to_pairs(mate_a_); }

 private:
  bool augment_from(int root) {
    std::fill(seen_.begin(), seen_.end(), 0);
    // Frames of (good, next neighbor position); `via[i]` is the bidder that
    // leads from frame i to frame i+1.
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    std::vector<int> via;
    while (!stack.empty()) {
      auto& [a, pos] = stack.back();
      const auto& nbrs = inst_->bidders_of(a);
      bool advanced = false;
      while (pos < nbrs.size()) {
        const int b = nbrs[pos++];
        if (forbidden_[b] || seen_[b]) continue;
        seen_[b] = 1;
        via.push_back(b);
        if (mate_b_[b] == -1) {
          for (std::size_t i = 0; i < stack.size(); ++i) {
            mate_a_[stack[i].first] = via[i];
            mate_b_[via[i]] = stack[i].first;
          }
          return true;
        }
        stack.push_back({mate_b_[b], 0});
        advanced = true;
        break;
      }
      if (!advanced) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }

  const BipartiteInstance* inst_;
  std::vector<int> mate_a_;
  std::vector<int> mate_b_;
  std::vector<char> forbidden_;
  std::vector<char> seen_;
};

// nu(G) together with a set U minimizing (|U| - odd(G - U) + |V|) / 2.
struct TutteBergeWitness {
  int value = 0;
  std::vector<int> witness_u;
};

inline constexpr int kTutteBergeMaxVertices = 16;

// Number of odd connected components of the graph induced by `alive`.
inline int odd_components(std::span<const std::uint32_t> adjacency, std::uint32_t alive) {
  int odd = 0;
  std::uint32_t left = alive;
  while (left != 0) {
    std::uint32_t comp = left & (~left + 1);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        grow |= adjacency[std::countr_zero(f)];
      }
      grow &= alive & ~comp;
      comp |= grow;
      frontier = grow;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    left &= ~comp;
  }
  return odd;
}

// Exhaustive Tutte-Berge minimum over all U, in Gray-code order. Test oracle;
// refuses graphs with more than 16 vertices.
inline TutteBergeWitness tutte_berge_brute(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kTutteBergeMaxVertices) {
    throw GuardError("Tutte-Berge enumeration limited to " +
                     std::to_string(kTutteBergeMaxVertices) + " vertices, got " +
                     std::to_string(n));
  }
  std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
  for (const GraphEdge& e : g.edges()) {
    adjacency[e.u] |= 1u << e.v;
    adjacency[e.v] |= 1u << e.u;
  }
  const std::uint32_t everything = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1);
  int best = std::numeric_limits<int>::max();
  std::uint32_t best_u = 0;
  for (std::uint32_t i = 0; i < (1u << n); ++i) {
    const std::uint32_t u = i ^ (i >> 1);
    const int twice = std::popcount(u) - odd_components(adjacency, everything & ~u) + n;
    if (twice < best) {
      best = twice;
      best_u = u;
    }
  }
  TutteBergeWitness w;
  w.value = best / 2;
  for (int v = 0; v < n; ++v) {
    if (best_u >> v & 1u) w.witness_u.push_back(v);
  }
  return w;
}

}  // namespace spm
