// Copyright 2026 The revgreedy Authors.
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "revgreedy/instance_io.hpp"

namespace fs = std::filesystem;

namespace revgreedy {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("revgreedy_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliResult run(const std::string& args) const {
    const std::string cmd = std::string(REVGREEDY_CLI) + " " + args + " 2>" + path("stderr.txt");
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(Cli, GenTree) {
  ASSERT_EQ(run("gen tree --h 2 -o " + path("t2.json")).code, 0);
  EXPECT_EQ(load_instance(path("t2.json")).size(), 29u);
  ASSERT_EQ(run("gen tree --h 2 --expand-graph -o " + path("t2g.json")).code, 0);
  EXPECT_EQ(load_instance(path("t2g.json")).oracle(), MetricSpace::Oracle::kGraph);
}

TEST_F(Cli, GenStar) {
  ASSERT_EQ(run("gen star --j 3 --w 5 -o " + path("s.json")).code, 0);
  EXPECT_EQ(load_instance(path("s.json")).size(), 7u);
}

TEST_F(Cli, GenRandomIsDeterministic) {
  const CliResult a = run("gen random --n 10 --kind unit_square_points --seed 7");
  const CliResult b = run("gen random --n 10 --kind unit_square_points --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, GenErrors) {
  EXPECT_EQ(run("gen tree --h 0").code, 2);
  EXPECT_EQ(run("gen tree --h 4").code, 3);
  EXPECT_EQ(run("gen tree --h 5 --allow-large").code, 3);
  EXPECT_EQ(run("gen star --j 0 --w 5").code, 2);
  EXPECT_EQ(run("gen random --n 5 --kind blobs").code, 2);
  EXPECT_EQ(run("gen tree").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, SolveTreeHeightTwo) {
  ASSERT_EQ(run("gen tree --h 2 -o " + path("t2.json")).code, 0);
  const CliResult r = run("solve " + path("t2.json") + " -k 1 --tie priority --exact -o " +
                    path("trace.csv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("final={28}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("cost=29"), std::string::npos);
  EXPECT_NE(r.out.find("ratio=1"), std::string::npos);
  const std::string trace = read("trace.csv");
  EXPECT_NE(trace.find("step,removed_or_added,cost_before,cost_after,delta"),
            std::string::npos);
}

TEST_F(Cli, SolveTreeHeightThree) {
  ASSERT_EQ(run("gen tree --h 3 -o " + path("t3.json")).code, 0);
  const CliResult r = run("solve " + path("t3.json") + " -k 1 --tie priority --exact -o " +
                    path("trace.csv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cost=3971"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ratio=1.16794"), std::string::npos) << r.out;
}

TEST_F(Cli, SolveKEqualsN) {
  ASSERT_EQ(run("gen star --j 3 --w 5 -o " + path("s.json")).code, 0);
  const CliResult r = run("solve " + path("s.json") + " -k 7 -o " + path("trace.csv"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cost=0"), std::string::npos) << r.out;
}

TEST_F(Cli, SolveAlgorithmsAndErrors) {
  ASSERT_EQ(run("gen random --n 12 --kind random_graph --seed 3 -o " + path("r.json")).code, 0);
  const CliResult fast = run("solve " + path("r.json") + " -k 2 --tie random:5");
  const CliResult ref = run("solve " + path("r.json") + " -k 2 --tie random:5 --alg rgreedy-ref");
  ASSERT_EQ(fast.code, 0);
  EXPECT_EQ(fast.out, ref.out);
  EXPECT_EQ(run("solve " + path("r.json") + " -k 2 --alg forward --format json").code, 0);
  EXPECT_EQ(run("solve " + path("r.json") + " -k 0").code, 2);
  EXPECT_EQ(run("solve " + path("r.json") + " -k 2 --tie coin").code, 2);
  EXPECT_EQ(run("solve " + path("missing.json") + " -k 1").code, 2);
  EXPECT_EQ(run("solve " + path("r.json") + " -k 6 --exact --budget 10").code, 3);
}

TEST_F(Cli, Exact) {
  ASSERT_EQ(run("gen star --j 3 --w 5 -o " + path("s.json")).code, 0);
  const CliResult r = run("exact " + path("s.json") + " -k 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,cost,members,labels\n1,21,0,mu\n");
}

TEST_F(Cli, VerifyCorpus) {
  const CliResult r = run("verify --check all --trials 200 --instances 60 --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("check,instance,params,holds,lhs,rhs,slack,witness\n", 0), 0u);
  EXPECT_EQ(r.out.find(",false,"), std::string::npos);
}

TEST_F(Cli, VerifyBadMetricFails) {
  {
    std::ofstream out(path("bad.json"));
    out << serialize_instance(testing::bad_triangle());
  }
  const CliResult r = run("verify --check metric " + path("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("triangle(0,1,2)"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyHarmonicKEqualsN) {
  ASSERT_EQ(run("gen tree --h 2 -o " + path("t2.json")).code, 0);
  EXPECT_EQ(run("verify --check harmonic " + path("t2.json") + " -k 29").code, 0);
  EXPECT_EQ(run("verify --check stepbound " + path("t2.json") + " -k 1 --tie priority").code, 0);
}

TEST_F(Cli, VerifyBadCheckName) { EXPECT_EQ(run("verify --check everything").code, 2); }

TEST_F(Cli, Sweep) {
  const CliResult r = run("sweep --family tree_lb --h 1..3 -k 1 --svg " + path("ratio.svg"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tree_lb,h=3,1794,2457,1,rgreedy,3971,3400,"), std::string::npos)
      << r.out;
  EXPECT_EQ(read("ratio.svg").rfind("<svg", 0), 0u);
  EXPECT_EQ(run("sweep --family star --j 10 --w 10,100,1000").code, 0);
}

TEST_F(Cli, SweepEmptyRange) {
  EXPECT_EQ(run("sweep --family tree --h 3..1").code, 2);
  EXPECT_EQ(run("sweep --family random --n 9..4").code, 2);
  EXPECT_EQ(run("sweep --family tree --h 4").code, 3);
}

TEST_F(Cli, Instrument) {
  ASSERT_EQ(run("gen tree --h 3 -o " + path("t3.json")).code, 0);
  ASSERT_EQ(run("solve " + path("t3.json") + " -k 1 --tie priority -o " + path("tr.csv")).code,
            0);
  const CliResult stored = run("instrument " + path("t3.json") + " --trace " + path("tr.csv"));
  const CliResult fresh = run("instrument " + path("t3.json") + " --tie priority");
  ASSERT_EQ(stored.code, 0);
  EXPECT_EQ(stored.out, fresh.out);
  EXPECT_NE(stored.out.find("1,1728,1728,"), std::string::npos) << stored.out;
  EXPECT_NE(stored.out.find("2,64,512,"), std::string::npos);
  EXPECT_NE(stored.out.find("3,1,216,"), std::string::npos);
  EXPECT_EQ(run("instrument " + path("t3.json") + " --format json").code, 0);
}

}  // namespace
}  // namespace revgreedy
