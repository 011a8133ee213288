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

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"

namespace spm::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "spm");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string put(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(Cli, SolveTightExample) {
  ASSERT_EQ(call({"generate", "--type", "tight", "--copies", "1", "--out", path("t.spm")}).code, 0);
  EXPECT_EQ(read_file(path("t.spm")).substr(0, 15), "p spm 10 15 30\n");
  const Result r = call({"solve", path("t.spm"), "--algo", "32regular", "--out", path("t.sol")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "32regular profit=9 guarantee=exact\n");
  const Result v = call({"verify", path("t.spm"), "--solution", path("t.sol")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "PASS 2ppm profit=9\n");
}

TEST_F(Cli, SolveBruteCompleteInstance) {
  const std::string file = put("c.spm", serialize_instance(fixtures::complete_2x3()));
  const Result r = call({"solve", file, "--algo", "brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "brute profit=2 guarantee=exact\n");
  const Result pm = call({"solve", file, "--algo", "brute", "--kind", "2pm", "--out", "-"});
  EXPECT_EQ(pm.code, 0);
  EXPECT_EQ(pm.out.substr(0, 9), "s 2pm 2\nS");
  EXPECT_EQ(pm.err, "brute profit=2 guarantee=exact\n");
}

TEST_F(Cli, PreconditionMismatch) {
  ASSERT_EQ(call({"generate", "--type", "biregular", "--na", "6", "--d", "3", "--out", path("r.spm")}).code, 0);
  EXPECT_EQ(call({"solve", path("r.spm"), "--algo", "a2"}).code, 2);
  EXPECT_EQ(call({"solve", path("r.spm"), "--algo", "d2regular"}).code, 2);
}

TEST_F(Cli, ParseErrorsReportTheLine) {
  const std::string file = put("bad.spm", "p spm 2 3 2\ne 1 1\ne 5 1\n");
  const Result r = call({"solve", file});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(call({"solve", path("missing.spm")}).code, 1);
  EXPECT_EQ(call({"solve", file, "--algo", "simplex"}).code, 1);
  EXPECT_EQ(call({"solve"}).code, 1);
  EXPECT_EQ(call({"generate", "--type", "biregular", "--na", "5", "--d", "3"}).code, 1);
  EXPECT_EQ(call({"generate", "--type", "cube"}).code, 1);
}

TEST_F(Cli, VertexCoverGadget) {
  ASSERT_EQ(call({"generate", "--type", "vc-gadget", "--src", "k4", "--out", path("k4.spm")}).code, 0);
  const BipartiteInstance inst = parse_instance(read_file(path("k4.spm")));
  EXPECT_EQ(inst.num_goods(), 14);
  EXPECT_EQ(inst.num_bidders(), 18);
  EXPECT_EQ(read_file(path("k4.spm.meta")).substr(0, 5), "x vc\n");
  const Result r = call({"verify", path("k4.spm"), "--identity", "vc"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11 + 3 = 14 PASS\n");

  ASSERT_EQ(call({"solve", path("k4.spm"), "--algo", "greedy", "--out", path("k4.sol")}).code, 0);
  const Result red = call({"reduce", path("k4.spm"), "--solution", path("k4.sol"), "--out", path("k4.cover.sol")});
  EXPECT_EQ(red.code, 0);
  EXPECT_EQ(red.out.substr(0, 13), "cover size=3 ");
  EXPECT_EQ(call({"verify", path("k4.spm"), "--solution", path("k4.cover.sol")}).code, 0);
}

TEST_F(Cli, KCoverGadget) {
  const std::string sets = put("toy.mkc", "p mkc 2 2 1\nt 1\nt 1 2\n");
  ASSERT_EQ(call({"generate", "--type", "kcover-gadget", "--sets", sets, "--copies", "1", "--out",
                  path("kc.spm")})
                .code,
            0);
  const Result r = call({"verify", path("kc.spm"), "--identity", "kcover"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 = 1*2 + 1 PASS\n");
}

TEST_F(Cli, SidecarMustMatch) {
  ASSERT_EQ(call({"generate", "--type", "vc-gadget", "--src", "k4", "--out", path("k4.spm")}).code, 0);
  ASSERT_EQ(call({"generate", "--type", "vc-gadget", "--src", "k33", "--out", path("k33.spm")}).code, 0);
  EXPECT_EQ(call({"verify", path("k4.spm"), "--identity", "vc", "--meta", path("k33.spm.meta")}).code, 1);
  EXPECT_EQ(call({"verify", path("k4.spm"), "--identity", "kcover"}).code, 1);
  EXPECT_EQ(call({"generate", "--type", "vc-gadget", "--src", "k4"}).code, 1);
}

TEST_F(Cli, SizeGuard) {
  ASSERT_EQ(call({"generate", "--type", "vc-gadget", "--src", "petersen", "--out", path("p.spm")}).code, 0);
  EXPECT_EQ(call({"verify", path("p.spm"), "--identity", "vc"}).code, 3);
  EXPECT_EQ(call({"solve", path("p.spm"), "--algo", "brute"}).code, 3);
}

TEST_F(Cli, TamperedSolutionFails) {
  const std::string inst = put("c.spm", serialize_instance(fixtures::complete_2x3()));
  const std::string good = put("ok.sol", "s 2ppm 2\nS 1\nW 1 2\nm 1 2\nm 2 3\n");
  EXPECT_EQ(call({"verify", inst, "--solution", good}).code, 0);
  const std::string meet = put("meet.sol", "s 2ppm 2\nS 2\nW 1 2\nm 1 2\nm 2 3\n");
  const Result r = call({"verify", inst, "--solution", meet});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "FAIL S meets matching\n");
  const std::string inflated = put("up.sol", "s 2ppm 3\nS 1\nW 1 2\nm 1 2\nm 2 3\n");
  EXPECT_EQ(call({"verify", inst, "--solution", inflated}).out, "FAIL profit mismatch\n");
}

TEST_F(Cli, GenerationIsDeterministic) {
  for (const char* name : {"a.spm", "b.spm"}) {
    ASSERT_EQ(call({"generate", "--type", "biregular", "--na", "8", "--d", "4", "--seed", "7", "--out",
                    path(name)})
                  .code,
              0);
  }
  EXPECT_EQ(read_file(path("a.spm")), read_file(path("b.spm")));
  EXPECT_EQ(call({"generate", "--type", "biregular", "--na", "8", "--d", "4", "--seed", "7"}).out,
            read_file(path("a.spm")));
}

TEST_F(Cli, SeedFromEnvironment) {
  const std::string file = put("i.spm", serialize_instance(fixtures::intro_example()));
  const Result flag = call({"solve", file, "--algo", "cg", "--seed", "5", "--out", "-"});
  setenv("SPM_SEED", "5", 1);
  const Result env = call({"solve", file, "--algo", "cg", "--out", "-"});
  unsetenv("SPM_SEED");
  EXPECT_EQ(flag.code, 0);
  EXPECT_EQ(flag.out, env.out);
}

TEST_F(Cli, IncidenceFromFile) {
  const std::string mg = put("q.mg", "p mg 2 4\ng 1 2\ng 1 2\ng 1 2\ng 1 2\n");
  const Result r = call({"generate", "--type", "incidence", "--src", mg, "--d", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p spm 2 4 8\ne 1 1\ne 1 2\ne 1 3\ne 1 4\ne 2 1\ne 2 2\ne 2 3\ne 2 4\n");
  EXPECT_EQ(call({"generate", "--type", "incidence", "--src", mg, "--d", "3"}).code, 1);
}

TEST_F(Cli, BenchEmptyDirectory) {
  const Result r = call({"bench", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "instance,n_a,n_b,algo,profit,optimum,ratio,ms,seed\n");
}

std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    out.push_back(cells);
  }
  return out;
}

TEST_F(Cli, BenchRegularInstancesAreExact) {
  for (int i = 0; i < 20; ++i) {
    const std::string name = "r" + std::to_string(100 + i) + ".spm";
    ASSERT_EQ(call({"generate", "--type", "biregular", "--na", std::to_string(4 + 2 * (i % 4)), "--d",
                    "3", "--seed", std::to_string(i), "--out", path(name)})
                  .code,
              0);
  }
  const Result r = call({"bench", dir_.string(), "--algos", "32regular,greedy", "--no-timing",
                         "--out", path("bench.csv")});
  ASSERT_EQ(r.code, 0);
  const auto table = rows(read_file(path("bench.csv")));
  ASSERT_EQ(table.size(), 40u);
  for (const auto& row : table) {
    ASSERT_EQ(row.size(), 9u);
    if (row[3] == "32regular") {
      EXPECT_EQ(row[6], "1.0000") << row[0];
    }
    EXPECT_GE(std::stod(row[6]), 0.5);
    EXPECT_EQ(row[7], "0.000");
  }
  const Result again = call({"bench", dir_.string(), "--algos", "32regular,greedy", "--no-timing"});
  EXPECT_EQ(again.out, read_file(path("bench.csv")));
}

TEST_F(Cli, BenchRecordsErrorsAndContinues) {
  put("a.spm", "p spm 1 1 1\ne 1 2\n");
  put("b.spm", serialize_instance(fixtures::complete_2x3()));
  const Result r = call({"bench", dir_.string(), "--algos", "a2,brute", "--seeds", "1,2", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  const auto table = rows(r.out);
  ASSERT_EQ(table.size(), 8u);
  EXPECT_EQ(table[0][4], "error:input");
  EXPECT_EQ(table[4][4], "error:precondition");
  EXPECT_EQ(table[6][4], "2");
  EXPECT_EQ(table[6][6], "1.0000");
  EXPECT_EQ(table[7][8], "2");
}

}  // namespace
}  // namespace spm::cli
