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

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spm/graph.hpp"
#include "spm/io.hpp"
#include "spm/matching.hpp"
#include "spm/solution.hpp"

namespace spm {
namespace {

using fixtures::zero_based;

TEST(Neighborhood, EmptySet) {
  EXPECT_TRUE(neighborhood(fixtures::intro_example(), std::vector<int>{}).empty());
}

TEST(Neighborhood, StarCoversEverything) {
  const BipartiteInstance star =
      fixtures::from_pairs(3, 4, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(neighborhood(star, std::vector<int>{0}), (std::vector<int>{0, 1, 2}));
}

TEST(Neighborhood, PairBidders) {
  const BipartiteInstance inst = fixtures::pair_bidders_example();
  EXPECT_EQ(neighborhood(inst, zero_based({1, 4})), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(neighborhood(inst, zero_based({2})), (std::vector<int>{0, 1}));
}

TEST(Neighborhood, OutOfRange) {
  EXPECT_THROW(neighborhood(fixtures::complete_2x3(), std::vector<int>{3}), InputError);
  EXPECT_THROW(neighborhood(fixtures::complete_2x3(), std::vector<int>{-1}), InputError);
}

TEST(Neighborhood, CoverageIsSubmodular) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteInstance inst = oracle::random_instance(6, 12, 0.3, rng);
    for (int sample = 0; sample < 20; ++sample) {
      const std::uint64_t s = rng() & 0xfff;
      const std::uint64_t t = rng() & 0xfff;
      auto as_set = [](std::uint64_t mask) {
        std::vector<int> v;
        for (int b = 0; b < 12; ++b) {
          if (mask >> b & 1u) v.push_back(b);
        }
        return v;
      };
      const int fs = coverage(inst, as_set(s));
      const int ft = coverage(inst, as_set(t));
      EXPECT_GE(fs + ft, coverage(inst, as_set(s | t)) + coverage(inst, as_set(s & t)));
      EXPECT_LE(fs, coverage(inst, as_set(s | t)));
    }
  }
}

Solution intro_solution() {
  const BipartiteInstance inst = fixtures::intro_example();
  return make_solution(inst, ProblemKind::TwoPPM, zero_based({4, 6, 7}), fixtures::intro_matching());
}

TEST(Validate, IntroExampleIsValid) {
  const Solution sol = intro_solution();
  const Validation v = validate_solution(fixtures::intro_example(), sol);
  EXPECT_TRUE(v.ok) << v.violation;
  EXPECT_EQ(sol.profit, 6);
  EXPECT_EQ(profit(fixtures::intro_example(), sol), 6);
}

TEST(Validate, SMeetsMatching) {
  Solution sol = intro_solution();
  sol.s_set = zero_based({1, 4});
  EXPECT_EQ(validate_solution(fixtures::intro_example(), sol).violation, "S meets matching");
}

TEST(Validate, NotAPerfect) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  Solution sol;
  sol.kind = ProblemKind::TwoPPM;
  sol.s_set = {0};
  sol.w_set = {0};
  sol.matching = {{0, 1}};
  sol.profit = 1;
  EXPECT_EQ(validate_solution(inst, sol).violation, "not A-perfect");
  sol.kind = ProblemKind::TwoPM;
  EXPECT_TRUE(validate_solution(inst, sol).ok);
}

TEST(Validate, ReportsFirstViolation) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  Solution sol = make_solution(inst, ProblemKind::TwoPPM, {0}, {{0, 1}, {1, 2}});
  ASSERT_TRUE(validate_solution(inst, sol).ok);

  Solution bad = sol;
  bad.s_set = {1, 0};
  EXPECT_EQ(validate_solution(inst, bad).violation, "S not a sorted subset of B");
  bad = sol;
  bad.w_set = {0, 2};
  EXPECT_EQ(validate_solution(inst, bad).violation, "W not a sorted subset of A");
  bad = sol;
  bad.matching = {{0, 1}, {1, 1}};
  EXPECT_EQ(validate_solution(inst, bad).violation, "matching endpoints not disjoint");
  bad = sol;
  bad.w_set = {0, 1};
  bad.matching = {{0, 1}};
  EXPECT_EQ(validate_solution(inst, bad).violation, "W not saturated");
  bad = sol;
  bad.w_set = {0};
  bad.kind = ProblemKind::TwoPM;
  EXPECT_EQ(validate_solution(inst, bad).violation, "matching leaves W");
  bad = sol;
  bad.s_set = {0, 1};
  bad.matching = {{0, 2}};
  bad.w_set = {0};
  bad.kind = ProblemKind::TwoPM;
  bad.profit = 1;
  EXPECT_TRUE(validate_solution(inst, bad).ok);
  bad.profit = 2;
  EXPECT_EQ(validate_solution(inst, bad).violation, "profit mismatch");

  const BipartiteInstance path = fixtures::short_path();
  Solution two = make_solution(path, ProblemKind::TwoPPM, {0, 2}, {{0, 1}, {1, 1}});
  EXPECT_EQ(validate_solution(path, two).violation, "matching endpoints not disjoint");
  Solution missing_edge = make_solution(path, ProblemKind::TwoPPM, {}, {{0, 2}, {1, 1}});
  EXPECT_EQ(validate_solution(path, missing_edge).violation, "matching uses a non-edge");
}

TEST(Validate, SizeBoundOnS) {
  const BipartiteInstance inst =
      fixtures::from_pairs(2, 4, {{1, 1}, {2, 2}, {1, 3}, {2, 4}});
  const Solution sol = make_solution(inst, ProblemKind::TwoPPM, {2, 3}, {{0, 0}, {1, 1}});
  EXPECT_TRUE(validate_solution(inst, sol).ok);
  const BipartiteInstance square = fixtures::from_pairs(2, 2, {{1, 1}, {2, 2}, {1, 2}});
  const Solution empty = make_solution(square, ProblemKind::TwoPPM, {}, {{0, 0}, {1, 1}});
  EXPECT_TRUE(validate_solution(square, empty).ok);
  EXPECT_EQ(empty.profit, 0);
  const BipartiteInstance wide = fixtures::from_pairs(1, 2, {{1, 1}, {1, 2}});
  Solution unallocated = make_solution(wide, ProblemKind::TwoPM, {1}, {});
  EXPECT_TRUE(validate_solution(wide, unallocated).ok);
  unallocated.kind = ProblemKind::TwoPPM;
  EXPECT_EQ(validate_solution(wide, unallocated).violation, "not A-perfect");
}

TEST(Profit, EmptySetEarnsNothing) {
  const BipartiteInstance inst = fixtures::intro_example();
  const Solution sol = make_solution(inst, ProblemKind::TwoPPM, {},
                                     {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  EXPECT_EQ(profit(inst, sol), 0);
}

TEST(Profit, CompleteTwoByThree) {
  const BipartiteInstance inst = fixtures::complete_2x3();
  const Solution sol = make_solution(inst, ProblemKind::TwoPPM, {0}, {{0, 1}, {1, 2}});
  EXPECT_EQ(profit(inst, sol), 2);
}

TEST(Profit, RejectsInvalid) {
  Solution sol = intro_solution();
  sol.s_set = {0};
  EXPECT_THROW(profit(fixtures::intro_example(), sol), InputError);
}

TEST(Profit, IndependentOfTheChosenMatching) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteInstance inst = oracle::random_instance(5, 9, 0.4, rng);
    std::vector<int> s;
    for (int b = 0; b < 9; ++b) {
      if (rng() % 4 == 0) s.push_back(b);
    }
    const auto m1 = a_perfect_matching(inst, s);
    if (!m1) continue;
    BipartiteMatching m2 = *m1;
    // Any other A-perfect matching avoiding S: rotate along an alternating cycle if one exists.
    std::vector<int> forbid = s;
    forbid.push_back(m1->front().b);
    if (auto alt = a_perfect_matching(inst, forbid)) m2 = *alt;
    const Solution a = make_solution(inst, ProblemKind::TwoPPM, s, *m1);
    const Solution b = make_solution(inst, ProblemKind::TwoPPM, s, m2);
    EXPECT_EQ(profit(inst, a), profit(inst, b));
  }
}

TEST(Instance, RejectsBadEdges) {
  EXPECT_THROW(BipartiteInstance(2, 2, std::vector<BidEdge>{{0, 0}, {0, 0}}), InputError);
  EXPECT_THROW(BipartiteInstance(2, 2, std::vector<BidEdge>{{2, 0}}), InputError);
  EXPECT_THROW(BipartiteInstance(2, 2, std::vector<BidEdge>{{0, -1}}), InputError);
}

TEST(Instance, AdjacencyIsSymmetricAndSorted) {
  const BipartiteInstance inst = fixtures::intro_example();
  EXPECT_EQ(inst.num_edges(), 19);
  for (int a = 0; a < inst.num_goods(); ++a) {
    EXPECT_TRUE(std::is_sorted(inst.bidders_of(a).begin(), inst.bidders_of(a).end()));
    for (int b : inst.bidders_of(a)) EXPECT_TRUE(inst.has_edge(a, b));
  }
  EXPECT_EQ(inst.goods_of(3), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(inst.goods_of(5), (std::vector<int>{5}));
}

TEST(Multigraph, RejectsLoopsAndRange) {
  Multigraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
  EXPECT_EQ(g.add_edge(0, 1), 0);
  EXPECT_EQ(g.add_edge(1, 0), 1);
  EXPECT_FALSE(g.is_simple());
}

TEST(Format, ParsesCompleteInstance) {
  const std::string text =
      "c two goods, three bidders\n"
      "p spm 2 3 6\n"
      "e 1 1\ne 1 2\ne 1 3\ne 2 1\ne 2 2\ne 2 3\n";
  EXPECT_EQ(parse_instance(text), fixtures::complete_2x3());
}

TEST(Format, EdgeOrderDoesNotMatter) {
  const std::string text = "p spm 2 3 4\ne 2 3\ne 1 1\ne 2 2\ne 1 2\n";
  EXPECT_EQ(serialize_instance(parse_instance(text)), "p spm 2 3 4\ne 1 1\ne 1 2\ne 2 2\ne 2 3\n");
}

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.line();
  }
  return -1;
}

TEST(Format, LineNumberedErrors) {
  EXPECT_EQ(error_line("p spm 2 3 2\ne 1 1\ne 5 1\n"), 3);
  EXPECT_EQ(error_line("p spm 2 3 2\ne 1 1\ne 1 1\n"), 3);
  EXPECT_EQ(error_line("p spx 2 3 2\n"), 1);
  EXPECT_EQ(error_line("c header follows\np spm 2 x 0\n"), 2);
  EXPECT_EQ(error_line("p spm 2 3 2\ne 1 1\n"), 2);
  EXPECT_EQ(error_line("p spm 1 1 1\ne 1 1\ne 1 1\n"), 3);
  EXPECT_EQ(error_line("e 1 1\n"), 1);
  EXPECT_EQ(error_line("p spm 1 1 1\ne 1 1 1\n"), 2);
  EXPECT_EQ(error_line(""), 1);
}

TEST(Format, SolutionRoundTrip) {
  const Solution sol = intro_solution();
  const std::string text = serialize_solution(sol);
  EXPECT_EQ(text,
            "s 2ppm 6\nS 4 6 7\nW 1 2 3 4 5 6\nm 1 1\nm 2 2\nm 3 3\nm 4 8\nm 5 5\nm 6 9\n");
  const Solution back = parse_solution(text);
  EXPECT_EQ(back.s_set, sol.s_set);
  EXPECT_EQ(back.w_set, sol.w_set);
  EXPECT_EQ(back.matching, sol.matching);
  EXPECT_EQ(back.profit, 6);
  EXPECT_EQ(serialize_solution(back), text);
}

TEST(Format, MultigraphAndSetSystem) {
  const std::string mg = "p mg 3 4\ng 1 2\ng 1 2\ng 1 3\ng 2 3\n";
  EXPECT_EQ(serialize_multigraph(parse_multigraph(mg)), mg);
  EXPECT_THROW(parse_multigraph("p mg 2 1\ng 1 1\n"), InputError);
  const std::string mkc = "p mkc 2 2 1\nt 1\nt 1 2\n";
  const SetSystem sys = parse_set_system(mkc);
  EXPECT_EQ(sys.universe_size, 2);
  EXPECT_EQ(sys.k, 1);
  EXPECT_EQ(sys.sets, (std::vector<std::vector<int>>{{0}, {0, 1}}));
  EXPECT_EQ(serialize_set_system(sys), mkc);
  EXPECT_THROW(parse_set_system("p mkc 2 1 1\nt 3\n"), InputError);
}

TEST(Format, GoldenFilesRoundTripByteForByte) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SPM_TEST_DATA)) {
    const std::string path = entry.path().string();
    const std::string ext = entry.path().extension().string();
    const std::string text = read_file(path);
    SCOPED_TRACE(path);
    if (ext == ".spm") {
      EXPECT_EQ(serialize_instance(parse_instance(text)), text);
    } else if (ext == ".sol") {
      EXPECT_EQ(serialize_solution(parse_solution(text)), text);
    } else if (ext == ".mg") {
      EXPECT_EQ(serialize_multigraph(parse_multigraph(text)), text);
    } else if (ext == ".mkc") {
      EXPECT_EQ(serialize_set_system(parse_set_system(text)), text);
    } else {
      continue;
    }
    ++checked;
  }
  EXPECT_GE(checked, 12);
}

TEST(Format, GoldenFilesMatchFixtures) {
  const std::string dir = SPM_TEST_DATA;
  EXPECT_EQ(parse_instance(read_file(dir + "/intro_example.spm")), fixtures::intro_example());
  EXPECT_EQ(parse_instance(read_file(dir + "/complete_2x3.spm")), fixtures::complete_2x3());
  EXPECT_EQ(parse_instance(read_file(dir + "/pair_bidders.spm")), fixtures::pair_bidders_example());
  EXPECT_EQ(parse_instance(read_file(dir + "/four_regular.spm")), fixtures::four_regular_example());
  const Solution sol = parse_solution(read_file(dir + "/intro_example.sol"));
  EXPECT_TRUE(validate_solution(fixtures::intro_example(), sol).ok);
  EXPECT_EQ(sol.profit, 6);
}

}  // namespace
}  // namespace spm
