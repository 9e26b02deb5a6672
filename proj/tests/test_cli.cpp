// Copyright 2026 The richdist Authors.
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
#include <fstream>
#include <sstream>

#include "richdist/cli.hpp"
#include "richdist/points_file.hpp"

namespace richdist {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("richdist_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, GenerateThenVerify) {
  const auto gen = run({"generate", "--theorem", "2", "--n", "24", "--m", "2", "-o", path("t2.txt")});
  ASSERT_EQ(gen.code, kExitPass) << gen.err;
  const auto ok = run({"verify", path("t2.txt"), "--classes", "4", "--multiplicity", "26"});
  EXPECT_EQ(ok.code, kExitPass) << ok.out << ok.err;
  const auto t1 = run({"generate", "--theorem", "1", "--n", "12", "-o", path("t1.txt")});
  ASSERT_EQ(t1.code, kExitPass);
  EXPECT_EQ(run({"verify", path("t1.txt"), "--classes", "3", "--multiplicity", "13"}).code, kExitPass);
}

TEST_F(CliTest, FailedClaimExitsOne) {
  write_points_file(path("sq.txt"), regular_ngon(4));
  EXPECT_EQ(run({"verify", path("sq.txt"), "--classes", "1", "--multiplicity", "4"}).code, kExitPass);
  EXPECT_EQ(run({"verify", path("sq.txt"), "--classes", "1", "--multiplicity", "5"}).code,
            kExitVerificationFailed);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "--theorem", "3", "--n", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "--theorem", "2", "--n", "4", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", path("missing.txt"), "--classes", "1", "--multiplicity", "1"}).code, kExitUsage);
  std::ofstream(path("bad.txt")) << "richdist 1\ncyclo 4\npoints 1\n3/0 1\n";
  const auto bad = run({"spectrum", path("bad.txt")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;
}

TEST_F(CliTest, SpectrumAndOracle) {
  write_points_file(path("hex.txt"), regular_ngon(6));
  const auto kv = run({"spectrum", path("hex.txt"), "--kv", "--histogram"});
  ASSERT_EQ(kv.code, kExitPass);
  EXPECT_NE(kv.out.find("distinct=3\n"), std::string::npos);
  EXPECT_NE(kv.out.find("histogram.6=2\n"), std::string::npos);
  const auto oracle = run({"oracle", path("hex.txt")});
  EXPECT_EQ(oracle.code, kExitPass) << oracle.err;
}

TEST_F(CliTest, OutputsAreByteDeterministic) {
  ASSERT_EQ(run({"generate", "--theorem", "2", "--n", "31", "--m", "3", "-o", path("a.txt")}).code, kExitPass);
  ASSERT_EQ(run({"generate", "--theorem", "2", "--n", "31", "--m", "3", "-o", path("b.txt")}).code, kExitPass);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  ASSERT_EQ(run({"svg", path("a.txt"), "-o", path("a.svg"), "--highlight", "3"}).code, kExitPass);
  ASSERT_EQ(run({"svg", path("a.txt"), "-o", path("b.svg"), "--highlight", "3"}).code, kExitPass);
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
  const auto s1 = run({"spectrum", path("a.txt")});
  const auto s2 = run({"spectrum", path("b.txt")});
  EXPECT_EQ(s1.out, s2.out);
}

TEST_F(CliTest, ReproduceFigures) {
  const auto r = run({"reproduce-figures", "--outdir", path("figs")});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(fs::exists(dir_ / "figs" / ("figure" + std::to_string(k) + ".svg")));
}

#ifdef RICHDIST_CLI_PATH
TEST_F(CliTest, BinaryExitCodes) {
  const std::string exe = RICHDIST_CLI_PATH;
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " generate --theorem 1 --n 9 -o " + path("x.txt") + " 2>/dev/null").c_str())), 0);
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " verify " + path("x.txt") + " --classes 2 --multiplicity 10 >/dev/null").c_str())), 0);
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " verify " + path("x.txt") + " --classes 3 --multiplicity 10 >/dev/null").c_str())), 1);
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " bogus 2>/dev/null").c_str())), 2);
}
#endif

}  // namespace
}  // namespace richdist
