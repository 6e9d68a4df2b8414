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

#include "minipol/report.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"

namespace minipol {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using nlohmann::ordered_json;

std::vector<std::string> Keys(const ordered_json& j) {
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  return keys;
}

TEST(ReportTest, PatchedReport) {
  auto c = testing::LoadCorpus("tcas");
  RepairResult r = Repair(c.program, c.suite);
  ordered_json j = ordered_json::parse(ReportToJson(r, "tcas.mini"));
  EXPECT_THAT(Keys(j),
              ElementsAre("status", "reason", "patch_kind", "location",
                          "expression", "level", "tests", "pairs_examined",
                          "candidates_by_phase", "timings", "diagnostics",
                          "diff"));
  EXPECT_EQ(j["status"], "PATCHED");
  EXPECT_TRUE(j["reason"].is_null());
  EXPECT_EQ(j["patch_kind"], "condition");
  EXPECT_EQ(j["location"]["file"], "tcas.mini");
  EXPECT_EQ(j["location"]["line"], 7);
  EXPECT_EQ(j["location"]["col"], 3);
  EXPECT_EQ(j["expression"], "up_sep != 0");
  EXPECT_EQ(j["level"], 1);
  EXPECT_EQ(j["tests"]["passing"], 3);
  EXPECT_EQ(j["tests"]["failing"], 2);
  EXPECT_EQ(j["candidates_by_phase"]["condition"], 2);
  EXPECT_FALSE(j["candidates_by_phase"].contains("precondition"));
  EXPECT_THAT(j["diff"].get<std::string>(), HasSubstr("+  if (up_sep != 0) {"));
}

TEST(ReportTest, NoPatchReport) {
  auto c = testing::LoadCorpus("lonely");
  RepairResult r = Repair(c.program, c.suite);
  ordered_json j = ordered_json::parse(ReportToJson(r, "lonely.mini"));
  EXPECT_EQ(j["status"], "NO_PATCH");
  EXPECT_EQ(j["reason"], "trivial_patch_guard");
  EXPECT_TRUE(j["location"].is_null());
  EXPECT_TRUE(j["diff"].is_null());
  EXPECT_FALSE(j["diagnostics"].empty());
  EXPECT_THAT(FormatHumanReport(r, "lonely.mini"),
              HasSubstr("No patch found (trivial_patch_guard)."));
}

TEST(ReportTest, RepeatableByteForByte) {
  auto c = testing::LoadCorpus("guard");
  const std::string a = ReportToJson(Repair(c.program, c.suite), "g.mini");
  const std::string b = ReportToJson(Repair(c.program, c.suite), "g.mini");
  EXPECT_EQ(a, b);
}

TEST(ReportTest, HumanReport) {
  auto c = testing::LoadCorpus("percentile");
  RepairResult r = Repair(c.program, c.suite);
  EXPECT_EQ(FormatHumanReport(r, "percentile.mini"),
            "Fix found!\n"
            "At line 12 of file percentile.mini, replace\n"
            "  if (pos > n)\n"
            "by\n"
            "  if (pos >= n)\n");
  auto g = testing::LoadCorpus("guard");
  std::string guard = FormatHumanReport(Repair(g.program, g.suite), "g.mini");
  EXPECT_THAT(guard, HasSubstr("At line 6 of file g.mini, guard\n"));
  EXPECT_THAT(guard, HasSubstr("if (result < index) {"));
}

TEST(ReportTest, Traces) {
  auto c = testing::LoadCorpus("tcas");
  RepairResult r = Repair(c.program, c.suite);
  ordered_json j = ordered_json::parse(TracesToJson(r.traces));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["kind"], "condition");
  EXPECT_EQ(j[0]["schema"][3]["name"], "bias");
  EXPECT_EQ(j[0]["constants"][1]["value"], "-1");
  EXPECT_EQ(j[0]["rows"].size(), 5u);
  EXPECT_EQ(j[0]["rows"][1]["test"], "t2");
  EXPECT_EQ(j[0]["rows"][1]["expected"], true);
}

}  // namespace
}  // namespace minipol
