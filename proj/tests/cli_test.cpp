// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qdiscord/measurement.hpp"
#include "qdiscord/property_check.hpp"
#include "qdiscord/state_io.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QDISCORD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::map<std::string, std::string> parse_report(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto space = line.find(' ');
    if (space != std::string::npos) kv[line.substr(0, space)] = line.substr(space + 1);
  }
  return kv;
}

std::string sample(const char* name) { return std::string(QDISCORD_SAMPLES_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qdiscord_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, ComputeBell) {
  const auto r = run("compute --state " + sample("bell.json") + " --theta 0");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto kv = parse_report(r.out);
  EXPECT_EQ(kv.at("discord"), "1.000000000000");
  EXPECT_EQ(kv.at("mutual_i"), "2.000000000000");
  EXPECT_EQ(kv.at("variant"), "rank1");
  EXPECT_EQ(kv.at("outcome_probs"), "0.500000000000 0.500000000000");
}

TEST_F(CliTest, ComputeProductIsZero) {
  for (const char* angles : {"--theta 0.3 --phi 2", "--theta 1.2", "--theta 0.7 --mode traced"}) {
    const auto r = run("compute --state " + sample("product.json") + " " + angles);
    ASSERT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(parse_report(r.out).at("discord"), "0.000000000000");
  }
}

TEST_F(CliTest, ComputeOnDephasedStateInItsOwnBasis) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto b = random_qubit_basis(seed, 0);
    const auto state = dephase(random_state(2, 2, seed), qubit_basis(b.theta, b.phi));
    std::ostringstream json;
    json.precision(17);
    json << state_to_json(state).dump();
    const std::string path = write("dephased.json", json.str());
    std::ostringstream args;
    args.precision(17);
    args << "compute --state " << path << " --theta " << b.theta << " --phi " << b.phi;
    const auto r = run(args.str());
    ASSERT_EQ(r.exit_code, 0) << r.out;
    EXPECT_LT(std::abs(std::stod(parse_report(r.out).at("discord"))), 1e-9);
  }
}

TEST_F(CliTest, InvalidStateExitsTwo) {
  const auto r = run("compute --state " + sample("malformed.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("NotPositive"), std::string::npos) << r.out;

  const auto broken = run("compute --state " + write("broken.json", "{\"dim_s\": 2, "));
  EXPECT_EQ(broken.exit_code, 2);
  EXPECT_NE(broken.out.find("ParseError"), std::string::npos) << broken.out;

  const auto trace = run("compute --state " +
                         write("trace.json", R"({"dim_s":1,"dim_a":2,"re":[[1,0],[0,1]]})"));
  EXPECT_EQ(trace.exit_code, 2);
  EXPECT_NE(trace.out.find("NotUnitTrace"), std::string::npos) << trace.out;
}

TEST_F(CliTest, DimensionProblemsExitThree) {
  const auto state = random_state(2, 3, 1);
  const std::string path = write("qutrit.json", state_to_json(state).dump());
  EXPECT_EQ(run("compute --state " + path).exit_code, 3);
  EXPECT_EQ(run("minimize --state " + path).exit_code, 3);
  const auto shape = run("compute --state " +
                         write("shape.json", R"({"dim_s":2,"dim_a":2,"re":[[1,0],[0,0]]})"));
  EXPECT_EQ(shape.exit_code, 3) << shape.out;
}

TEST_F(CliTest, MissingFileExitsFour) {
  EXPECT_EQ(run("compute --state " + (dir_ / "nope.json").string()).exit_code, 4);
}

TEST_F(CliTest, Minimize) {
  const auto r = run("minimize --state " + sample("werner_0.25.json") + " --grid 16x8 --refine");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NEAR(std::stod(parse_report(r.out).at("min_discord")), 0.0741931879808172, 1e-9);
  EXPECT_EQ(run("minimize --state " + sample("bell.json") + " --grid 16").exit_code, 1);
}

TEST_F(CliTest, Ppt) {
  const auto w = run("ppt --state " + sample("werner_0.25.json"));
  ASSERT_EQ(w.exit_code, 0) << w.out;
  EXPECT_EQ(parse_report(w.out).at("is_ppt"), "true");
  const auto b = run("ppt --state " + sample("bell.json"));
  EXPECT_EQ(parse_report(b.out).at("is_ppt"), "false");
  EXPECT_EQ(parse_report(b.out).at("min_eigenvalue"), "-0.500000000000");
}

TEST_F(CliTest, SweepFileIsDeterministic) {
  const std::string a = (dir_ / "a.csv").string(), b = (dir_ / "b.csv").string();
  ASSERT_EQ(run("sweep --family cnot --z-steps 2 --theta-steps 3 --out " + a).exit_code, 0);
  ASSERT_EQ(run("sweep --family cnot --z-steps 2 --theta-steps 3 --out " + b).exit_code, 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {}), tb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_EQ(ta, tb);
  std::istringstream lines(ta);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "z,theta,phi,discord,mutual_i,mutual_j");
  EXPECT_EQ(first,
            "0.000000000000,0.000000000000,1.000000000000,0.000000000000,1.000000000000,"
            "1.000000000000");
}

TEST_F(CliTest, SweepToStdoutAndErrors) {
  const auto r = run("sweep --family werner --z-steps 3 --theta-steps 2 --phi 0.5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  EXPECT_EQ(run("sweep --family cnot --out /nonexistent_dir/x.csv").exit_code, 4);
  EXPECT_EQ(run("sweep --family ghz").exit_code, 1);
  EXPECT_EQ(run("sweep --z-steps 1").exit_code, 1);
}

TEST_F(CliTest, Check) {
  const auto ok = run("check --trials 200 --seed 7");
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_NE(ok.out.find("all propositions hold"), std::string::npos);
  EXPECT_EQ(run("check --trials 1 --seed 3").exit_code, 0);
  EXPECT_EQ(run("check --trials 0").exit_code, 1);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("compute").exit_code, 1);
  EXPECT_EQ(run("compute --state x --mode bogus").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace
}  // namespace qdiscord
