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

#include "minipol/synth/smtlib.h"

#include <cmath>
#include <cstdlib>
#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "brute_force_oracle.h"
#include "minipol/synth/sexpr.h"
#include "minipol/synth/solver.h"
#include "test_util.h"
#include "z3_runner.h"

namespace minipol {
namespace {

using ::testing::HasSubstr;

TEST(SExprTest, ParsesAndPrints) {
  auto exprs = ParseSExprs("(a (b c) |x y|) ; comment\n d");
  ASSERT_EQ(exprs.size(), 2u);
  EXPECT_EQ(exprs[0].Head(), "a");
  EXPECT_EQ(exprs[0].ToString(), "(a (b c) |x y|)");
  EXPECT_TRUE(exprs[1].IsAtom("d"));
  EXPECT_THROW(ParseSExprs("(a"), SExprError);
  EXPECT_THROW(ParseSExprs("a)"), SExprError);
}

TEST(SExprTest, Numerals) {
  EXPECT_EQ(SExpr::Int(5).ToString(), "5");
  EXPECT_EQ(SExpr::Int(-3).ToString(), "(- 3)");
  EXPECT_EQ(SExpr::Real(-2.5).ToString(), "(- 2.5)");
  EXPECT_EQ(SExpr::Real(3).ToString(), "3.0");
  EXPECT_THROW(SExpr::Real(NAN), std::invalid_argument);
  EXPECT_THROW(SExpr::Real(INFINITY), std::invalid_argument);
}

TEST(SExprTest, ExactDecimal) {
  EXPECT_EQ(ExactDecimal(0.125), "0.125");
  EXPECT_EQ(ExactDecimal(100.0), "100.0");
  EXPECT_EQ(ExactDecimal(0.1),
            "0.1000000000000000055511151231257827021181583404541015625");
  // Reading the expansion back gives the same double.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    double d = dist(rng);
    EXPECT_EQ(std::strtod(ExactDecimal(d).c_str(), nullptr), d);
  }
}

TEST(SmtScriptTest, RejectsWhatTheExporterNeverWrites) {
  EXPECT_THROW(ParseSmtScript("(declare-fun x () Int)"), SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(assert y)"), SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(declare-fun x () Int)"
                              "(assert (+ x 1))"),
               SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(declare-fun x () Int)"
                              "(declare-fun x () Int)"),
               SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(push 1)"), SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(declare-fun b () Bool)"
                              "(declare-fun x () Int)(assert (= b x))"),
               SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA"), SmtError);
  EXPECT_THROW(ParseSmtScript("(set-logic QF_LIA)(declare-fun x () Int)"
                              "(assert (ite true (= x 1) (= x 2)))"),
               SmtError);
}

TEST(SmtScriptTest, Evaluates) {
  SmtScript s = ParseSmtScript(
      "(set-logic QF_LIRA)(declare-fun x () Int)(declare-const r Real)"
      "(assert (and (<= 1 x) (< x 3)))"
      "(assert (=> (= x 2) (not (= r 0.5))))"
      "(assert (or (and (> x 1) (= (* x x) 4)) (= (- x) (- 1))))"
      "(check-sat)(get-value (x))");
  EXPECT_EQ(s.logic, "QF_LIRA");
  EXPECT_EQ(s.get_value, (std::vector<std::string>{"x"}));
  EXPECT_TRUE(Satisfies(s, {{"x", SmtValue::Int(2)}, {"r", SmtValue::Real(1.0)}}));
  EXPECT_TRUE(Satisfies(s, {{"x", SmtValue::Int(1)}, {"r", SmtValue::Real(0.5)}}));
  EXPECT_FALSE(Satisfies(s, {{"x", SmtValue::Int(2)}, {"r", SmtValue::Real(0.5)}}));
  EXPECT_FALSE(Satisfies(s, {{"x", SmtValue::Int(3)}, {"r", SmtValue::Real(0)}}));
  EXPECT_THROW(Satisfies(s, {{"r", SmtValue::Real(0)}}), SmtError);
}

TEST(SmtScriptTest, SolverReplies) {
  SolverReply r = ParseSolverReply("sat\n((l_r 9) (l_in_1 1) (x (- 4)))");
  EXPECT_EQ(r.status, "sat");
  EXPECT_EQ(r.model.at("l_r"), 9);
  EXPECT_EQ(r.model.at("x"), -4);
  EXPECT_EQ(ParseSolverReply("unsat\n").status, "unsat");
  EXPECT_EQ(ParseSolverReply("").status, "");
  EXPECT_THROW(ParseSolverReply("sat\n((l_r 1.5))"), SmtError);
}

// Every model the internal solver returns satisfies the exported script,
// once the per-row values are filled in.
TEST(SmtExportTest, InternalModelsSatisfyTheExport) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    auto p = testing::MakeRandomProblem(rng, 2, 4);
    ConstraintSystem cs =
        BuildConstraintSystem(p.input, p.blocks, p.blocks.empty() ? 0 : 4);
    SmtScript script = ParseSmtScript(cs.ToSmtLib());
    SolveResult r = Solve(cs);
    if (r.status != SolveStatus::kSat) continue;
    ++checked;
    EXPECT_TRUE(Satisfies(script, CompleteAssignment(cs, r.model)))
        << cs.ToSmtLib();
  }
  EXPECT_GT(checked, 20);
}

TEST(SmtExportTest, Z3AgreesWithTheExhaustiveOracle) {
  if (!testing::Z3Available()) GTEST_SKIP() << "python3 z3 not installed";
  std::mt19937_64 rng(4242);
  const std::string scratch =
      ::testing::TempDir() + "minipol_smtlib_test.smt2";
  for (int iter = 0; iter < 25; ++iter) {
    auto p = testing::MakeRandomProblem(rng, 2, 2);
    ConstraintSystem cs =
        BuildConstraintSystem(p.input, p.blocks, p.blocks.empty() ? 0 : 2);
    auto reply =
        testing::SolveWithZ3(cs.ToSmtLib(), cs.LocationVariables(), scratch);
    ASSERT_TRUE(reply.has_value());
    const bool sat = testing::OracleSatisfiable(p.input, p.blocks);
    ASSERT_EQ(reply->status, sat ? "sat" : "unsat") << cs.ToSmtLib();
    if (sat) {
      std::string why;
      ASSERT_TRUE(cs.IsWellFormed(reply->model, &why)) << why;
      EXPECT_EQ(cs.Evaluate(reply->model), cs.expected);
    }
  }
}

}  // namespace
}  // namespace minipol
