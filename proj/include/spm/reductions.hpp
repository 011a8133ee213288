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

// Instance generators whose optimum is known in closed form or through an
// exact identity with another problem:
//
//  * vertex-cover gadget of a 3-regular graph (n vertices, m edges):
//      OPT_2PPM + OPT_VC = 2n + m
//  * max k-cover gadget with N copies of the universe:
//      OPT_2PPM = N * OPT_MC + (m - k)
//  * incidence instances of d-regular multigraphs, random (d,2)-regular
//    instances and disjoint copies of a 3-regular multigraph whose maximum
//    matching has exactly 2|V|/5 edges.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spm/auxiliary.hpp"
#include "spm/brute.hpp"
#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/io.hpp"
#include "spm/random.hpp"
#include "spm/solution.hpp"

namespace spm {

inline constexpr int kBruteCoverMaxVertices = 24;
inline constexpr int kBruteKCoverMaxSets = 24;

// ---------------------------------------------------------------------------
// Vertex-cover gadget

// Goods are numbered a_e (edges) then a_v^1, then a_v^2; bidders b_e, then
// b_v, then b_v^1, then b_v^2. Each vertex v carries the path
// b_v - a_v^1 - b_v^1 - a_v^2 - b_v^2.
struct VcGadget {
  BipartiteInstance instance;
  Multigraph source;

  int n() const { return source.num_vertices(); }
  int m() const { return source.num_edges(); }

  int edge_good(int e) const { return e; }
  int edge_bidder(int e) const { return e; }
  int vertex_bidder(int v) const { return m() + v; }
  int first_good(int v) const { return m() + v; }
  int first_bidder(int v) const { return m() + n() + v; }
  int second_good(int v) const { return m() + n() + v; }
  int second_bidder(int v) const { return m() + 2 * n() + v; }
};

inline VcGadget vc_gadget(const Multigraph& src) {
  if (!src.is_regular(3)) throw InputError("vertex-cover gadget needs a 3-regular source graph");
  if (!src.is_simple()) throw InputError("vertex-cover gadget needs a simple source graph");
  const int n = src.num_vertices();
  const int m = src.num_edges();
  std::vector<BidEdge> edges;
  for (const GraphEdge& e : src.edges()) {
    edges.push_back({e.id, e.id});
    edges.push_back({e.id, m + e.u});
    edges.push_back({e.id, m + e.v});
  }
  for (int v = 0; v < n; ++v) {
    edges.push_back({m + v, m + v});              // a_v^1 - b_v
    edges.push_back({m + v, m + n + v});          // a_v^1 - b_v^1
    edges.push_back({m + n + v, m + n + v});      // a_v^2 - b_v^1
    edges.push_back({m + n + v, m + 2 * n + v});  // a_v^2 - b_v^2
  }
  return VcGadget{BipartiteInstance(m + 2 * n, m + 3 * n, edges), src};
}

inline bool is_vertex_cover(const Multigraph& g, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : cover) in.at(v) = 1;
  for (const GraphEdge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

// Solution of the gadget built from a vertex cover U: every a_e takes its
// private bidder; covered vertices free b_v, the others free b_v^1.
// Profit is 2n + m - |U|.
inline Solution construct_from_cover(const VcGadget& g, std::vector<int> cover) {
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.n()) throw InputError("cover vertex " + std::to_string(v + 1) + " out of range");
    in[v] = 1;
  }
  for (const GraphEdge& e : g.source.edges()) {
    if (!in[e.u] && !in[e.v]) {
      throw InputError("edge " + std::to_string(e.id + 1) + " (" + std::to_string(e.u + 1) + "," +
                       std::to_string(e.v + 1) + ") is not covered");
    }
  }
  BipartiteMatching m;
  std::vector<int> s;
  for (int e = 0; e < g.m(); ++e) m.push_back({g.edge_good(e), g.edge_bidder(e)});
  for (int v = 0; v < g.n(); ++v) {
    if (in[v]) {
      m.push_back({g.first_good(v), g.first_bidder(v)});
      s.push_back(g.vertex_bidder(v));
    } else {
      m.push_back({g.first_good(v), g.vertex_bidder(v)});
      s.push_back(g.first_bidder(v));
    }
    m.push_back({g.second_good(v), g.second_bidder(v)});
  }
  return make_solution(g.instance, ProblemKind::TwoPPM, std::move(s), std::move(m), "from-cover",
                       "exact-identity");
}

struct CoverExtraction {
  std::vector<int> cover;  // vertices of the source graph, ascending
  Solution solution;       // transformed solution, profit >= the input's
};

// Normalizes a feasible gadget solution so that the vertices whose b_v is
// unsaturated form a vertex cover, without lowering the profit:
//   1. every a_e moves to its private bidder b_e;
//   2. every a_v^2 moves to b_v^2;
//   3. for each source edge uv with b_u and b_v both saturated, the lower
//      endpoint u gets a_u^1 moved to b_u^1, freeing b_u.
// S of the result is the set of all unsaturated bidders.
inline CoverExtraction extract_vertex_cover(const VcGadget& g, const Solution& sol) {
  if (sol.kind != ProblemKind::TwoPPM) throw InputError("expected a 2ppm solution");
  if (Validation v = validate_solution(g.instance, sol); !v) {
    throw InputError("solution does not fit this gadget: " + v.violation);
  }
  const int n = g.n();
  const int m = g.m();
  std::vector<int> mate_a(static_cast<std::size_t>(g.instance.num_goods()), -1);
  std::vector<int> mate_b(static_cast<std::size_t>(g.instance.num_bidders()), -1);
  auto assign = [&](int a, int b) {
    if (mate_a[a] != -1) mate_b[mate_a[a]] = -1;
    SPM_ENSURE(mate_b[b] == -1, "rematch target is taken");
    mate_a[a] = b;
    mate_b[b] = a;
  };
  for (const BidEdge& e : sol.matching) assign(e.a, e.b);

  for (int e = 0; e < m; ++e) assign(g.edge_good(e), g.edge_bidder(e));
  for (int v = 0; v < n; ++v) {
    assign(g.second_good(v), g.second_bidder(v));
    SPM_ENSURE(mate_a[g.first_good(v)] == g.vertex_bidder(v) ||
                   mate_a[g.first_good(v)] == g.first_bidder(v),
               "a_v^1 matched outside its path");
  }
  int changing_passes = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const GraphEdge& e : g.source.edges()) {
      if (mate_b[g.vertex_bidder(e.u)] == -1 || mate_b[g.vertex_bidder(e.v)] == -1) continue;
      const int w = std::min(e.u, e.v);
      assign(g.first_good(w), g.first_bidder(w));
      changed = true;
    }
    if (changed) ++changing_passes;
    SPM_ENSURE(changing_passes <= n, "transformation did not reach a fixpoint");
  }

  CoverExtraction out;
  std::vector<int> s;
  for (int b = 0; b < g.instance.num_bidders(); ++b) {
    if (mate_b[b] == -1) s.push_back(b);
  }
  for (int v = 0; v < n; ++v) {
    if (mate_b[g.vertex_bidder(v)] == -1) out.cover.push_back(v);
  }
  out.solution = make_solution(g.instance, ProblemKind::TwoPPM, std::move(s),
                               detail::to_pairs(mate_a), "vc-transform", sol.guarantee);
  SPM_ENSURE(is_vertex_cover(g.source, out.cover), "extracted set is not a vertex cover");
  SPM_ENSURE(out.solution.profit >= detail::profit_unchecked(g.instance, sol),
             "transformation lowered the profit");
  SPM_ENSURE(static_cast<int>(out.cover.size()) == 2 * n + m - out.solution.profit,
             "cover size differs from 2n + m - profit");
  return out;
}

// Minimum vertex cover by enumeration in order of increasing size.
inline std::vector<int> brute_vertex_cover(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kBruteCoverMaxVertices) {
    throw GuardError("vertex-cover enumeration limited to " + std::to_string(kBruteCoverMaxVertices) +
                     " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> edge_masks;
  for (const GraphEdge& e : g.edges()) edge_masks.push_back((1u << e.u) | (1u << e.v));
  for (int size = 0; size <= n; ++size) {
    // Gosper's hack over all size-subsets in increasing numeric order.
    std::uint64_t mask = size == 0 ? 0 : (1ull << size) - 1;
    while (mask < (1ull << n) || (size == 0 && mask == 0)) {
      bool ok = true;
      for (std::uint32_t em : edge_masks) {
        if ((em & mask) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<int> cover;
        for (int v = 0; v < n; ++v) {
          if (mask >> v & 1u) cover.push_back(v);
        }
        return cover;
      }
      if (size == 0) break;
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  SPM_ENSURE(false, "the full vertex set is always a cover");
  return {};
}

struct VcIdentityReport {
  int opt_2ppm = 0;
  int opt_vc = 0;
  int n = 0;
  int m = 0;
  bool holds = false;
};

// OPT_2PPM (brute force on the gadget) + OPT_VC (brute force on the source)
// against 2n + m.
inline VcIdentityReport certify_vc_identity(const VcGadget& g) {
  VcIdentityReport r;
  r.n = g.n();
  r.m = g.m();
  r.opt_vc = static_cast<int>(brute_vertex_cover(g.source).size());
  r.opt_2ppm = solve_brute_2ppm(g.instance).profit;
  r.holds = r.opt_2ppm + r.opt_vc == 2 * r.n + r.m;
  return r;
}

// ---------------------------------------------------------------------------
// Max k-cover gadget

// Goods: N copies of the universe (copy i, element u -> i*n + u), then m - k
// dummies (1 <= k <= m). Bidders: one private bidder per copied element (same numbering),
// then one bidder per set (N*n + s).
struct KcGadget {
  BipartiteInstance instance;
  SetSystem system;
  int copies = 1;

  int n() const { return system.universe_size; }
  int m() const { return static_cast<int>(system.sets.size()); }
  int k() const { return system.k; }
  int element_good(int copy, int u) const { return copy * n() + u; }
  int private_bidder(int copy, int u) const { return copy * n() + u; }
  int dummy_good(int j) const { return copies * n() + j; }
  int set_bidder(int s) const { return copies * n() + s; }
};

inline KcGadget kcover_gadget(const SetSystem& system, int copies) {
  const int n = system.universe_size;
  const int m = static_cast<int>(system.sets.size());
  // With k = 0 no set node can cover the dummies and the identity breaks.
  if (system.k < 1 || system.k > m) throw InputError("k must lie in [1, m]");
  if (copies < 1) throw InputError("number of copies must be at least 1");
  for (const auto& set : system.sets) {
    for (int u : set) {
      if (u < 0 || u >= n) throw InputError("set element out of range");
    }
  }
  KcGadget g{BipartiteInstance(), system, copies};
  for (auto& set : g.system.sets) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InputError("repeated element in set");
    }
  }
  std::vector<BidEdge> edges;
  for (int i = 0; i < copies; ++i) {
    for (int u = 0; u < n; ++u) edges.push_back({g.element_good(i, u), g.private_bidder(i, u)});
    for (int s = 0; s < m; ++s) {
      for (int u : g.system.sets[s]) edges.push_back({g.element_good(i, u), g.set_bidder(s)});
    }
  }
  for (int j = 0; j < m - system.k; ++j) {
    for (int s = 0; s < m; ++s) edges.push_back({g.dummy_good(j), g.set_bidder(s)});
  }
  g.instance = BipartiteInstance(copies * n + (m - system.k), copies * n + m, edges);
  return g;
}

// Largest number of elements covered by exactly k of the sets.
inline int brute_max_k_cover(const SetSystem& system) {
  const int m = static_cast<int>(system.sets.size());
  if (m > kBruteKCoverMaxSets) {
    throw GuardError("max k-cover enumeration limited to " + std::to_string(kBruteKCoverMaxSets) +
                     " sets, got " + std::to_string(m));
  }
  if (system.k < 0 || system.k > m) throw InputError("k must lie in [0, m]");
  int best = 0;
  std::vector<int> hits(static_cast<std::size_t>(system.universe_size), 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != system.k) continue;
    std::fill(hits.begin(), hits.end(), 0);
    int covered = 0;
    for (int s = 0; s < m; ++s) {
      if (!(mask >> s & 1u)) continue;
      for (int u : system.sets[s]) covered += hits[u]++ == 0;
    }
    best = std::max(best, covered);
  }
  return best;
}

struct KcoverIdentityReport {
  int opt_2ppm = 0;
  int opt_mc = 0;
  int copies = 0;
  int m = 0;
  int k = 0;
  bool holds = false;
};

inline KcoverIdentityReport certify_kcover_identity(const KcGadget& g) {
  KcoverIdentityReport r;
  r.copies = g.copies;
  r.m = g.m();
  r.k = g.k();
  r.opt_mc = brute_max_k_cover(g.system);
  r.opt_2ppm = solve_brute_2ppm(g.instance).profit;
  r.holds = r.opt_2ppm == r.copies * r.opt_mc + (r.m - r.k);
  return r;
}

// ---------------------------------------------------------------------------
// Regular instances

// Goods are the vertices of h, bidders its edges (bidder id = edge id).
inline BipartiteInstance incidence_instance(const Multigraph& h, int d) {
  if (!h.is_regular(d)) throw InputError("incidence instance needs a " + std::to_string(d) + "-regular multigraph");
  std::vector<BidEdge> edges;
  for (const GraphEdge& e : h.edges()) {
    edges.push_back({e.u, e.id});
    edges.push_back({e.v, e.id});
  }
  return BipartiteInstance(h.num_vertices(), h.num_edges(), edges);
}

// Random instance with goods of degree d and bidders of degree 2: the
// configuration model pairs the n_a * d good stubs uniformly, rejecting
// pairings where a bidder would bid twice on the same good. Two bidders may
// share the same pair of goods.
inline BipartiteInstance gen_biregular(int num_goods, int d, std::uint64_t seed) {
  if (num_goods < 2 || d < 2) throw InputError("need at least 2 goods and d >= 2");
  if ((static_cast<long long>(num_goods) * d) % 2 != 0) throw InputError("n_a * d must be even");
  std::vector<int> stubs;
  for (int a = 0; a < num_goods; ++a) stubs.insert(stubs.end(), static_cast<std::size_t>(d), a);
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 100;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    shuffle(std::span<int>(stubs), rng);
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size() && !loop; i += 2) loop = stubs[i] == stubs[i + 1];
    if (loop) continue;
    std::vector<BidEdge> edges;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      const int b = static_cast<int>(i / 2);
      edges.push_back({stubs[i], b});
      edges.push_back({stubs[i + 1], b});
    }
    return BipartiteInstance(num_goods, static_cast<int>(stubs.size() / 2), edges);
  }
  throw InputError("no loop-free pairing found in " + std::to_string(kAttempts) + " attempts");
}

// Random loop-free d-regular multigraph.
inline Multigraph gen_regular_multigraph(int num_vertices, int d, std::uint64_t seed) {
  return build_auxiliary_graph(gen_biregular(num_vertices, d, seed)).graph;
}

// `copies` disjoint copies of a 10-vertex 3-regular multigraph with maximum
// matching size 4: a center joined to three hubs, each hub joined to both
// ends of a doubled edge.
inline Multigraph gen_tight_example(int copies) {
  if (copies < 1) throw InputError("number of copies must be at least 1");
  Multigraph g(10 * copies);
  for (int c = 0; c < copies; ++c) {
    const int o = 10 * c;
    for (int hub = 1; hub <= 3; ++hub) g.add_edge(o, o + hub);
    for (int hub = 1; hub <= 3; ++hub) {
      const int x = o + 2 * hub + 2;
      const int y = x + 1;
      g.add_edge(o + hub, x);
      g.add_edge(o + hub, y);
      g.add_edge(x, y);
      g.add_edge(x, y);
    }
  }
  return g;
}

inline Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Multigraph complete_bipartite_3_3() {
  Multigraph g(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Multigraph petersen_graph() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

// "k4", "k33" or "petersen".
inline std::optional<Multigraph> named_graph(std::string_view name) {
  if (name == "k4") return complete_graph(4);
  if (name == "k33") return complete_bipartite_3_3();
  if (name == "petersen") return petersen_graph();
  return std::nullopt;
}

}  // namespace spm
