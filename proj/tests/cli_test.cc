// Copyright 2026 The Minipol Authors
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

// Drives the built command-line tool and checks its exit status and output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"
#include "z3_runner.h"

namespace minipol {
namespace {

using ::testing::HasSubstr;

std::string g_binary;

struct Outcome {
  int exit_code;
  std::string output;
};

Outcome Invoke(const std::string& args) {
  int status = 0;
  std::string out =
      testing::RunCommand(g_binary + " " + args + " 2>&1", &status);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Case(const std::string& name, const std::string& file) {
  return testing::CorpusPath(name, file);
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(CliTest, RepairSucceeds) {
  const std::string report = ::testing::TempDir() + "cli_report.json";
  const std::string patched = ::testing::TempDir() + "cli_patched.mini";
  Outcome o = Invoke("repair " + Case("tcas", "program.mini") + " " +
                  Case("tcas", "tests.json") + " --report " + report +
                  " --write-patched " + patched);
  EXPECT_EQ(o.exit_code, 0) << o.output;
  EXPECT_THAT(o.output, HasSubstr("Fix found!"));
  EXPECT_THAT(o.output, HasSubstr("  if (up_sep != 0)"));
  auto j = nlohmann::json::parse(Slurp(report));
  EXPECT_EQ(j["status"], "PATCHED");
  EXPECT_THAT(Slurp(patched), HasSubstr("if (up_sep != 0) {"));

  Outcome rerun = Invoke("run " + patched + " " + Case("tcas", "tests.json"));
  EXPECT_EQ(rerun.exit_code, 0) << rerun.output;
  EXPECT_THAT(rerun.output, HasSubstr("5 passed, 0 failed"));
}

TEST(CliTest, NoPatchIsExitOne) {
  Outcome o = Invoke("repair " + Case("lonely", "program.mini") + " " +
                  Case("lonely", "tests.json"));
  EXPECT_EQ(o.exit_code, 1) << o.output;
  EXPECT_THAT(o.output, HasSubstr("trivial_patch_guard"));
}

TEST(CliTest, FailingRunIsExitOne) {
  Outcome o = Invoke("run " + Case("guard", "program.mini") + " " +
                  Case("guard", "tests.json"));
  EXPECT_EQ(o.exit_code, 1);
  EXPECT_THAT(o.output, HasSubstr("bare_file_name: error: index out of bounds"));
}

TEST(CliTest, BadInputIsExitTwo) {
  EXPECT_EQ(Invoke("").exit_code, 2);
  EXPECT_EQ(Invoke("repair /nonexistent.mini /nonexistent.json").exit_code, 2);
  EXPECT_EQ(Invoke("repair " + Case("tcas", "program.mini") + " " +
                Case("tcas", "tests.json") + " --mode sideways")
                .exit_code,
            2);
  // A suite for a different program.
  Outcome o = Invoke("repair " + Case("tcas", "program.mini") + " " +
                  Case("guard", "tests.json"));
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_THAT(o.output, HasSubstr("no function named"));
  const std::string broken = ::testing::TempDir() + "cli_broken.mini";
  std::ofstream(broken) << "fn f(x: int) -> int { return x +; }\n";
  EXPECT_EQ(Invoke("run " + broken + " " + Case("tcas", "tests.json")).exit_code,
            2);
}

TEST(CliTest, DumpsAndExports) {
  const std::string dir = ::testing::TempDir() + "cli_smt";
  Outcome o = Invoke("repair " + Case("percentile", "program.mini") + " " +
                  Case("percentile", "tests.json") +
                  " --dump-spectrum - --solver smtlib-export --smt-out " + dir);
  EXPECT_EQ(o.exit_code, 0) << o.output;
  EXPECT_THAT(o.output, HasSubstr("node_id\tline\tcol\tkind"));
  EXPECT_THAT(o.output, HasSubstr("if (pos >= n)"));
  bool level_one = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    EXPECT_THAT(name, ::testing::MatchesRegex("program_[0-9]+_L[0-9]\\.smt2"));
    if (name.find("_L1.smt2") != std::string::npos) {
      level_one = true;
      EXPECT_THAT(Slurp(entry.path().string()), HasSubstr("(set-logic QF_LIRA)"));
    }
  }
  EXPECT_TRUE(level_one);
}

TEST(CliTest, Corpus) {
  Outcome o = Invoke(std::string("corpus --dir ") + MINIPOL_CORPUS_DIR);
  EXPECT_EQ(o.exit_code, 0) << o.output;
  EXPECT_THAT(o.output, HasSubstr("ok        tcas"));
}

}  // namespace
}  // namespace minipol

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_test <path to minipol>\n");
    return 2;
  }
  minipol::g_binary = argv[1];
  return RUN_ALL_TESTS();
}
