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
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spm/error.hpp"

namespace spm {

// An edge of the bid graph: good `a` in A, bidder `b` in B (0-based).
struct BidEdge {
  int a = 0;
  int b = 0;

  friend bool operator==(const BidEdge&, const BidEdge&) = default;
  friend auto operator<=>(const BidEdge&, const BidEdge&) = default;
};

// The bid graph G = (A u B, E). Goods are 0..num_goods()-1, bidders are
// 0..num_bidders()-1. Adjacency lists on both sides are strictly increasing.
// Immutable once built.
class BipartiteInstance {
 public:
  BipartiteInstance() = default;

  // Throws InputError on out-of-range indices or duplicate edges.
  BipartiteInstance(int num_goods, int num_bidders, std::span<const BidEdge> edges)
      : adj_a_(static_cast<std::size_t>(check_count(num_goods, "goods"))),
        adj_b_(static_cast<std::size_t>(check_count(num_bidders, "bidders"))) {
    for (const BidEdge& e : edges) {
      if (e.a < 0 || e.a >= num_goods) {
        throw InputError("good index " + std::to_string(e.a) + " out of range");
      }
      if (e.b < 0 || e.b >= num_bidders) {
        throw InputError("bidder index " + std::to_string(e.b) + " out of range");
      }
      adj_a_[e.a].push_back(e.b);
      adj_b_[e.b].push_back(e.a);
    }
    for (auto* side : {&adj_a_, &adj_b_}) {
      for (auto& list : *side) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
          throw InputError("duplicate edge");
        }
      }
    }
    num_edges_ = static_cast<int>(edges.size());
  }

  BipartiteInstance(int num_goods, int num_bidders, const std::vector<BidEdge>& edges)
      : BipartiteInstance(num_goods, num_bidders, std::span<const BidEdge>(edges)) {}

  int num_goods() const { return static_cast<int>(adj_a_.size()); }
  int num_bidders() const { return static_cast<int>(adj_b_.size()); }
  int num_edges() const { return num_edges_; }

  const std::vector<int>& bidders_of(int a) const { return adj_a_.at(a); }
  const std::vector<int>& goods_of(int b) const { return adj_b_.at(b); }
  int degree_of_good(int a) const { return static_cast<int>(adj_a_.at(a).size()); }
  int degree_of_bidder(int b) const { return static_cast<int>(adj_b_.at(b).size()); }

  bool has_edge(int a, int b) const {
    if (a < 0 || a >= num_goods() || b < 0 || b >= num_bidders()) return false;
    return std::binary_search(adj_a_[a].begin(), adj_a_[a].end(), b);
  }

  // All edges sorted by (a, b).
  std::vector<BidEdge> edges() const {
    std::vector<BidEdge> out;
    out.reserve(static_cast<std::size_t>(num_edges_));
    for (int a = 0; a < num_goods(); ++a) {
      for (int b : adj_a_[a]) out.push_back({a, b});
    }
    return out;
  }

  friend bool operator==(const BipartiteInstance& x, const BipartiteInstance& y) {
    return x.adj_a_ == y.adj_a_ && x.adj_b_ == y.adj_b_;
  }

 private:
  static int check_count(int n, const char* what) {
    if (n < 0) throw InputError(std::string("negative number of ") + what);
    return n;
  }

  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
  int num_edges_ = 0;
};

// Degree summary used by the dispatcher and the degree-gap bound.
struct DegreeProfile {
  int min_good = 0;
  int max_good = 0;
  int min_bidder = 0;
  int max_bidder = 0;
};

inline DegreeProfile degree_profile(const BipartiteInstance& inst) {
  DegreeProfile p;
  for (int a = 0; a < inst.num_goods(); ++a) {
    const int d = inst.degree_of_good(a);
    p.min_good = a == 0 ? d : std::min(p.min_good, d);
    p.max_good = std::max(p.max_good, d);
  }
  for (int b = 0; b < inst.num_bidders(); ++b) {
    const int d = inst.degree_of_bidder(b);
    p.min_bidder = b == 0 ? d : std::min(p.min_bidder, d);
    p.max_bidder = std::max(p.max_bidder, d);
  }
  return p;
}

// True iff every good has degree `d_goods` and every bidder degree `d_bidders`.
inline bool is_biregular(const BipartiteInstance& inst, int d_goods, int d_bidders) {
  for (int a = 0; a < inst.num_goods(); ++a) {
    if (inst.degree_of_good(a) != d_goods) return false;
  }
  for (int b = 0; b < inst.num_bidders(); ++b) {
    if (inst.degree_of_bidder(b) != d_bidders) return false;
  }
  return true;
}

struct GraphEdge {
  int u = 0;
  int v = 0;
  int id = 0;
};

// Undirected multigraph. Parallel edges are allowed, loops are not.
// Edge ids are dense: the i-th added edge has id i.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices) : adj_(static_cast<std::size_t>(num_vertices)) {
    if (num_vertices < 0) throw InputError("negative vertex count");
  }

  // Returns the new edge id.
  int add_edge(int u, int v) {
    if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices()) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    const int id = num_edges();
    edges_.push_back({u, v, id});
    adj_[u].push_back({v, id});
    adj_[v].push_back({u, id});
    return id;
  }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int id) const { return edges_.at(id); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  // (neighbor, edge id) pairs in insertion order.
  const std::vector<std::pair<int, int>>& incident(int v) const { return adj_.at(v); }

  bool is_regular(int d) const {
    for (int v = 0; v < num_vertices(); ++v) {
      if (degree(v) != d) return false;
    }
    return true;
  }

  // No parallel edges.
  bool is_simple() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges_.size());
    for (const GraphEdge& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

 private:
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<GraphEdge> edges_;
};

// A matching in a bid graph, as (good, bidder) pairs sorted by good.
using BipartiteMatching = std::vector<BidEdge>;

// A matching in a multigraph, as sorted edge ids.
using GraphMatching = std::vector<int>;

// True iff the pairs use pairwise distinct goods and pairwise distinct bidders.
inline bool endpoints_disjoint(const BipartiteMatching& m) {
  std::vector<int> as, bs;
  for (const BidEdge& e : m) {
    as.push_back(e.a);
    bs.push_back(e.b);
  }
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  return std::adjacent_find(as.begin(), as.end()) == as.end() &&
         std::adjacent_find(bs.begin(), bs.end()) == bs.end();
}

inline bool endpoints_disjoint(const Multigraph& g, const GraphMatching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int id : m) {
    const GraphEdge& e = g.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace spm
