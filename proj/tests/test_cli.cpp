/*
 * Copyright (C) 2026 The angvel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "angvel/fileio.hpp"
#include "angvel/table.hpp"

namespace angvel {
namespace {

namespace fs = std::filesystem;

const std::string kCli = ANGVEL_CLI_PATH;
const std::string kScenarios = ANGVEL_SOURCE_DIR "/scenarios/";

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("angvel_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the CLI; stdout lands in out_, stderr in err_.
  int run(const std::string& args) {
    const std::string cmd =
        kCli + " " + args + " >" + path("stdout.txt") + " 2>" + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    out_ = read_file(path("stdout.txt"));
    err_ = read_file(path("stderr.txt"));
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

TEST_F(Cli, SimWritesArtifacts) {
  ASSERT_EQ(run("sim --scenario " + kScenarios + "paper_sec4.scn --out " + path("t.csv") + " --svg " +
                path("t.svg")),
            0)
      << err_;
  EXPECT_NE(out_.find("samples = 10001\n"), std::string::npos) << out_;
  EXPECT_NE(out_.find("a2_violations = 0\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("t.svg")));
  EXPECT_EQ(read_csv(read_file(path("t.csv"))).rows.size(), 10001u);
  EXPECT_NE(read_file(path("t.csv.effective.scn")).find("l_mode = constant"), std::string::npos);
}

TEST_F(Cli, SimIsReproducible) {
  const std::string args = "sim --scenario " + kScenarios + "paper_sec4.scn --out ";
  ASSERT_EQ(run(args + path("a.csv")), 0);
  ASSERT_EQ(run(args + path("b.csv")), 0);
  EXPECT_EQ(read_file(path("a.csv")), read_file(path("b.csv")));
}

TEST_F(Cli, EffectiveScenarioReruns) {
  ASSERT_EQ(run("sim --scenario " + kScenarios + "paper_sec4.scn --out " + path("a.csv")), 0);
  ASSERT_EQ(run("sim --scenario " + path("a.csv.effective.scn") + " --out " + path("b.csv")), 0);
  EXPECT_EQ(read_file(path("a.csv")), read_file(path("b.csv")));
}

TEST_F(Cli, GainsReportsUnsatisfied) {
  EXPECT_EQ(run("gains --scenario " + kScenarios + "paper_sec4.scn"), 2);
  EXPECT_NE(out_.find("suggested_k = 14.5"), std::string::npos) << out_;
  EXPECT_NE(out_.find("gain1_strict = PASS"), std::string::npos);
  EXPECT_NE(out_.find("gain2 = FAIL"), std::string::npos);
  EXPECT_NE(out_.find("l_bound1 = 1308\n"), std::string::npos);
  EXPECT_NE(out_.find("result = unsatisfied"), std::string::npos);
}

TEST_F(Cli, GainsTheoremModeSatisfied) {
  EXPECT_EQ(run("gains --scenario " + kScenarios + "theorem_mode.scn"), 0) << out_;
  EXPECT_NE(out_.find("result = satisfied"), std::string::npos);
}

TEST_F(Cli, FitAndPlot) {
  ASSERT_EQ(run("sim --scenario " + kScenarios + "paper_sec4.scn --out " + path("t.csv")), 0);
  ASSERT_EQ(run("fit --traj " + path("t.csv") + " --col znorm --t0 2 --t1 10"), 0) << err_;
  EXPECT_NE(out_.find("lambda = 4.9"), std::string::npos) << out_;
  EXPECT_NE(out_.find("r_squared = 0.99"), std::string::npos) << out_;
  ASSERT_EQ(run("plot --traj " + path("t.csv") + " --cols znorm e1norm --log-y --out " + path("p.svg")), 0)
      << err_;
  EXPECT_EQ(read_file(path("p.svg")).find("<?xml"), 0u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("sim --scenario " + kScenarios + "paper_sec4.scn"), 1);
  EXPECT_EQ(run("sim --scenario " + path("missing.scn") + " --out " + path("x.csv")), 1);
  EXPECT_EQ(run("fit --traj " + path("missing.csv") + " --t0 0 --t1 1"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, BadScenarioNamesKey) {
  write_file_atomic(path("bad.scn"), read_file(kScenarios + "paper_sec4.scn") + "dt = 0.002\n");
  EXPECT_EQ(run("sim --scenario " + path("bad.scn") + " --out " + path("x.csv")), 1);
  EXPECT_NE(err_.find("'dt'"), std::string::npos) << err_;
  EXPECT_FALSE(fs::exists(path("x.csv")));
}

TEST_F(Cli, BlowUpExitsThree) {
  std::string text = read_file(kScenarios + "theorem_mode.scn");
  const auto set = [&text](const std::string& key, const std::string& value) {
    const std::size_t at = text.find("\n" + key + " ") + 1;
    text.replace(at, text.find('\n', at) - at, key + " = " + value);
  };
  set("dt", "0.01");
  set("t_final", "10");
  write_file_atomic(path("stiff.scn"), text);
  EXPECT_EQ(run("sim --scenario " + path("stiff.scn") + " --out " + path("x.csv")), 3) << err_;
  EXPECT_NE(err_.find("warning: dt * max(l1, l2)"), std::string::npos) << err_;
  EXPECT_NE(err_.find("integration failure"), std::string::npos) << err_;
  EXPECT_FALSE(fs::exists(path("x.csv")));
}

}  // namespace
}  // namespace angvel
