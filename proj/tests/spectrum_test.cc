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

#include "minipol/spectrum.h"

#include <cmath>
#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "minipol/error.h"
#include "test_util.h"

namespace minipol {
namespace {

using ::testing::HasSubstr;
using testing::LoadCorpus;
using testing::StmtAtLine;

// Written from the coefficient's definition: the cosine between a
// statement's coverage vector and the failure vector.
double CosineOracle(const std::vector<bool>& covered,
                    const std::vector<bool>& failed) {
  double dot = 0, norm_c = 0, norm_f = 0;
  for (size_t i = 0; i < covered.size(); ++i) {
    dot += covered[i] && failed[i];
    norm_c += covered[i];
    norm_f += failed[i];
  }
  if (norm_c == 0 || norm_f == 0) return 0.0;
  return dot / (std::sqrt(norm_c) * std::sqrt(norm_f));
}

TEST(SpectrumTest, OchiaiKnownValues) {
  EXPECT_DOUBLE_EQ(Ochiai(1, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(Ochiai(1, 3, 1), 0.5);
  EXPECT_DOUBLE_EQ(Ochiai(2, 2, 2), 1.0 / std::sqrt(2.0));
  EXPECT_EQ(Ochiai(0, 0, 3), 0.0);
  EXPECT_EQ(Ochiai(0, 5, 3), 0.0);
}

TEST(SpectrumTest, OchiaiMatchesCosineOracle) {
  std::mt19937 rng(42);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + rng() % 30;
    std::vector<bool> covered(n), failed(n);
    int ef = 0, ep = 0, tf = 0;
    for (int t = 0; t < n; ++t) {
      covered[t] = rng() % 2;
      failed[t] = rng() % 3 == 0;
      tf += failed[t];
      ef += covered[t] && failed[t];
      ep += covered[t] && !failed[t];
    }
    EXPECT_NEAR(Ochiai(ef, ep, tf), CosineOracle(covered, failed), 1e-12);
  }
}

TEST(SpectrumTest, TcasRanking) {
  auto c = LoadCorpus("tcas");
  Spectrum s = BuildSpectrum(c.program, RunSuite(c.program, c.suite));
  EXPECT_EQ(s.total_failed, 2);
  EXPECT_EQ(s.total_passed, 3);
  // Line 4 runs only for inhibit=true: both failures and one pass.
  const StatementSpectrum* line4 = s.Find(StmtAtLine(c.program, 4));
  ASSERT_NE(line4, nullptr);
  EXPECT_EQ(line4->failed, 2);
  EXPECT_EQ(line4->passed, 1);
  EXPECT_NEAR(line4->suspiciousness, 2.0 / std::sqrt(2.0 * 3.0), 1e-12);
  EXPECT_EQ(s.ranking.front().loc.line, 4);
  const StatementSpectrum* line7 = s.Find(StmtAtLine(c.program, 7));
  EXPECT_NEAR(line7->suspiciousness, 2.0 / std::sqrt(2.0 * 5.0), 1e-12);
  // Every non-block statement appears exactly once.
  EXPECT_EQ(s.ranking.size(), c.program.StatementIds().size());
}

TEST(SpectrumTest, TiesBreakBySourcePosition) {
  auto c = LoadCorpus("tcas");
  Spectrum s = BuildSpectrum(c.program, RunSuite(c.program, c.suite));
  for (size_t i = 1; i < s.ranking.size(); ++i) {
    const auto& a = s.ranking[i - 1];
    const auto& b = s.ranking[i];
    ASSERT_GE(a.suspiciousness, b.suspiciousness);
    if (a.suspiciousness == b.suspiciousness) {
      EXPECT_TRUE(a.loc.line < b.loc.line ||
                  (a.loc.line == b.loc.line && a.loc.col < b.loc.col));
    }
  }
}

TEST(SpectrumTest, RuntimeErrorsCountAsFailures) {
  auto c = LoadCorpus("percentile");
  Spectrum s = BuildSpectrum(c.program, RunSuite(c.program, c.suite));
  EXPECT_EQ(s.total_failed, 1);
  auto conditions = RankedConditions(c.program, s);
  ASSERT_EQ(conditions.size(), 2u);
  // The second if (line 12) outranks the first (line 10).
  EXPECT_EQ(c.program.FindStmt(*c.program.IfOfCondition(conditions[0]))->loc.line,
            12);
  EXPECT_NEAR(s.Find(StmtAtLine(c.program, 12))->suspiciousness,
              1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(s.Find(StmtAtLine(c.program, 10))->suspiciousness,
              1.0 / std::sqrt(6.0), 1e-12);
}

TEST(SpectrumTest, NothingToLocalizeWhenAllPass) {
  auto c = LoadCorpus("tcas");
  std::vector<TestCase> passing = {c.suite[0], c.suite[2]};
  try {
    BuildSpectrum(c.program, RunSuite(c.program, passing));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_THAT(e.what(), HasSubstr("nothing to localize"));
  }
}

TEST(SpectrumTest, SkippableCandidatesNeedFailingCoverage) {
  auto c = LoadCorpus("guard");
  Spectrum s = BuildSpectrum(c.program, RunSuite(c.program, c.suite));
  std::vector<int> lines;
  for (int id : RankedSkippableStatements(c.program, s)) {
    lines.push_back(c.program.FindStmt(id)->loc.line);
  }
  EXPECT_EQ(lines, (std::vector<int>{4, 5, 6}));
  EXPECT_TRUE(RankedConditions(c.program, s).empty());
}

TEST(SpectrumTest, TsvDump) {
  auto c = LoadCorpus("tcas");
  std::string tsv =
      SpectrumToTsv(BuildSpectrum(c.program, RunSuite(c.program, c.suite)));
  EXPECT_THAT(tsv, HasSubstr("node_id\tline\tcol\tkind\tfailed\tpassed\t"
                             "suspiciousness\n"));
  EXPECT_THAT(tsv, HasSubstr("\t4\t5\tassign\t2\t1\t0.816497\n"));
}

}  // namespace
}  // namespace minipol
