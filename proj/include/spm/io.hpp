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

// Line-oriented text formats. All indices are 1-based on disk, 0-based in
// memory. Lines starting with 'c' are comments; blank lines are ignored.
//
//   instance:    p spm <n_a> <n_b> <n_edges>   then   e <a> <b>
//   solution:    s <2pm|2ppm> <profit>, S <b...>, W <a...>, m <a> <b>
//   multigraph:  p mg <n_v> <n_e>               then   g <u> <v>
//   max k-cover: p mkc <n> <m> <k>              then   t <elements...>

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spm/error.hpp"
#include "spm/graph.hpp"
#include "spm/solution.hpp"

namespace spm {

// A Max k-Cover input: universe {0..universe_size-1}, a family of subsets,
// and the number k of subsets to pick.
struct SetSystem {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

// Splits text into non-comment, non-blank tokenized lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens[0].front() == 'c') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline int to_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

// 1-based index in [1, bound] -> 0-based.
inline int to_index(std::string_view tok, int bound, int line, const char* what) {
  const int v = to_int(tok, line);
  if (v < 1 || v > bound) {
    throw InputError(std::string(what) + " index " + std::to_string(v) + " out of range [1, " +
                         std::to_string(bound) + "]",
                     line);
  }
  return v - 1;
}

inline int to_count(std::string_view tok, int line) {
  const int v = to_int(tok, line);
  if (v < 0) throw InputError("negative count", line);
  return v;
}

inline void expect_arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) {
    throw InputError("expected " + std::to_string(n) + " fields, got " +
                         std::to_string(l.tokens.size()),
                     l.number);
  }
}

}  // namespace detail

inline BipartiteInstance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw InputError("missing 'p spm' header", 1);
  const detail::Line& h = lines[0];
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != "spm") {
    throw InputError("expected 'p spm <n_a> <n_b> <n_edges>'", h.number);
  }
  detail::expect_arity(h, 5);
  const int na = detail::to_count(h.tokens[2], h.number);
  const int nb = detail::to_count(h.tokens[3], h.number);
  const int ne = detail::to_count(h.tokens[4], h.number);

  std::vector<BidEdge> edges;
  edges.reserve(static_cast<std::size_t>(ne));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(na));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& l = lines[i];
    if (l.tokens[0] != "e") throw InputError("expected an edge line 'e <a> <b>'", l.number);
    detail::expect_arity(l, 3);
    if (static_cast<int>(edges.size()) == ne) {
      throw InputError("more edge lines than declared (" + std::to_string(ne) + ")", l.number);
    }
    const int a = detail::to_index(l.tokens[1], na, l.number, "good");
    const int b = detail::to_index(l.tokens[2], nb, l.number, "bidder");
    for (int other : adj[a]) {
      if (other == b) throw InputError("duplicate edge", l.number);
    }
    adj[a].push_back(b);
    edges.push_back({a, b});
  }
  if (static_cast<int>(edges.size()) != ne) {
    throw InputError("expected " + std::to_string(ne) + " edge lines, found " +
                         std::to_string(edges.size()),
                     lines.back().number);
  }
  return BipartiteInstance(na, nb, edges);
}

inline std::string serialize_instance(const BipartiteInstance& inst) {
  std::ostringstream out;
  out << "p spm " << inst.num_goods() << ' ' << inst.num_bidders() << ' ' << inst.num_edges()
      << '\n';
  for (const BidEdge& e : inst.edges()) out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
  return out.str();
}

inline std::string serialize_solution(const Solution& sol) {
  std::ostringstream out;
  out << "s " << kind_name(sol.kind) << ' ' << sol.profit << '\n';
  out << 'S';
  for (int b : sol.s_set) out << ' ' << b + 1;
  out << "\nW";
  for (int a : sol.w_set) out << ' ' << a + 1;
  out << '\n';
  for (const BidEdge& e : sol.matching) out << "m " << e.a + 1 << ' ' << e.b + 1 << '\n';
  return out.str();
}

// Indices are only checked for being positive here; range checks against an
// instance happen in validate_solution.
inline Solution parse_solution(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "s") {
    throw InputError("expected 's <kind> <profit>' header", lines.empty() ? 1 : lines[0].number);
  }
  const detail::Line& h = lines[0];
  detail::expect_arity(h, 3);
  Solution sol;
  const auto kind = parse_kind(h.tokens[1]);
  if (!kind) throw InputError("unknown problem kind '" + std::string(h.tokens[1]) + "'", h.number);
  sol.kind = *kind;
  sol.profit = detail::to_count(h.tokens[2], h.number);

  constexpr int kAny = 1 << 30;
  bool have_s = false, have_w = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& l = lines[i];
    const std::string_view tag = l.tokens[0];
    if (tag == "S" || tag == "W") {
      bool& have = tag == "S" ? have_s : have_w;
      if (have) throw InputError("repeated '" + std::string(tag) + "' line", l.number);
      have = true;
      auto& dst = tag == "S" ? sol.s_set : sol.w_set;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) {
        dst.push_back(detail::to_index(l.tokens[t], kAny, l.number, tag == "S" ? "bidder" : "good"));
      }
    } else if (tag == "m") {
      detail::expect_arity(l, 3);
      sol.matching.push_back({detail::to_index(l.tokens[1], kAny, l.number, "good"),
                              detail::to_index(l.tokens[2], kAny, l.number, "bidder")});
    } else {
      throw InputError("unexpected line tag '" + std::string(tag) + "'", l.number);
    }
  }
  if (!have_s || !have_w) throw InputError("missing 'S' or 'W' line", lines.back().number);
  return sol;
}

inline Multigraph parse_multigraph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw InputError("missing 'p mg' header", 1);
  const detail::Line& h = lines[0];
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != "mg") {
    throw InputError("expected 'p mg <n_v> <n_e>'", h.number);
  }
  detail::expect_arity(h, 4);
  const int nv = detail::to_count(h.tokens[2], h.number);
  const int ne = detail::to_count(h.tokens[3], h.number);
  Multigraph g(nv);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& l = lines[i];
    if (l.tokens[0] != "g") throw InputError("expected an edge line 'g <u> <v>'", l.number);
    detail::expect_arity(l, 3);
    if (g.num_edges() == ne) throw InputError("more edge lines than declared", l.number);
    const int u = detail::to_index(l.tokens[1], nv, l.number, "vertex");
    const int v = detail::to_index(l.tokens[2], nv, l.number, "vertex");
    if (u == v) throw InputError("loop edge", l.number);
    g.add_edge(u, v);
  }
  if (g.num_edges() != ne) {
    throw InputError("expected " + std::to_string(ne) + " edge lines, found " +
                         std::to_string(g.num_edges()),
                     lines.back().number);
  }
  return g;
}

inline std::string serialize_multigraph(const Multigraph& g) {
  std::ostringstream out;
  out << "p mg " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const GraphEdge& e : g.edges()) out << "g " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline SetSystem parse_set_system(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw InputError("missing 'p mkc' header", 1);
  const detail::Line& h = lines[0];
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != "mkc") {
    throw InputError("expected 'p mkc <n> <m> <k>'", h.number);
  }
  detail::expect_arity(h, 5);
  SetSystem sys;
  sys.universe_size = detail::to_count(h.tokens[2], h.number);
  const int m = detail::to_count(h.tokens[3], h.number);
  sys.k = detail::to_count(h.tokens[4], h.number);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const detail::Line& l = lines[i];
    if (l.tokens[0] != "t") throw InputError("expected a set line 't <elements...>'", l.number);
    if (static_cast<int>(sys.sets.size()) == m) throw InputError("more set lines than declared", l.number);
    std::vector<int> set;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      set.push_back(detail::to_index(l.tokens[t], sys.universe_size, l.number, "element"));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InputError("repeated element in set", l.number);
    }
    sys.sets.push_back(std::move(set));
  }
  if (static_cast<int>(sys.sets.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " set lines, found " +
                         std::to_string(sys.sets.size()),
                     lines.back().number);
  }
  return sys;
}

inline std::string serialize_set_system(const SetSystem& sys) {
  std::ostringstream out;
  out << "p mkc " << sys.universe_size << ' ' << sys.sets.size() << ' ' << sys.k << '\n';
  for (const auto& set : sys.sets) {
    out << 't';
    for (int u : set) out << ' ' << u + 1;
    out << '\n';
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

}  // namespace spm
