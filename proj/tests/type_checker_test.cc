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

#include "minipol/type_checker.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "minipol/error.h"
#include "minipol/parser.h"
#include "test_util.h"

namespace minipol {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::LoadCorpus;
using testing::StmtAtLine;
using testing::Typed;

std::string FirstError(const std::string& source) {
  try {
    TypeCheck(ParseProgram(source));
  } catch (const TypeErrors& e) {
    return e.diagnostics().front().message;
  }
  return "";
}

TEST(TypeCheckerTest, AnnotatesEveryExpression) {
  TypedProgram p = Typed(
      "fn f(x: real, a: array<int>) -> bool {\n"
      "  return x * 2.0 > real(len(a)) || a[0] == 3;\n"
      "}\n");
  int untyped = 0;
  VisitStmts(*p.program().functions[0].body, [&](const Stmt& s) {
    for (const Expr* e : OwnExprs(s)) {
      VisitExprs(*e, [&](const Expr& x) { untyped += !x.type.has_value(); });
    }
  });
  EXPECT_EQ(untyped, 0);
}

TEST(TypeCheckerTest, ReportsTypeErrors) {
  EXPECT_THAT(FirstError("fn f(x: int) -> int { if (x) { return 1; } "
                         "return 0; }"),
              HasSubstr("condition must be BOOL, found int"));
  EXPECT_THAT(FirstError("fn f(x: int) -> int { return x + 1.0; }"),
              HasSubstr("expects two int or two real operands, got int and "
                        "real"));
  EXPECT_THAT(FirstError("fn f() -> int { return y; }"),
              HasSubstr("unknown name 'y'"));
  EXPECT_THAT(FirstError("fn f(x: int) -> int { let x: int = 1; return x; }"),
              HasSubstr("shadowing"));
  EXPECT_THAT(FirstError("fn f(x: int) -> int { if (x > 0) { return 1; } }"),
              HasSubstr("may finish without returning"));
  EXPECT_THAT(FirstError("fn f(x: int) -> int { return g(x); }"),
              HasSubstr("unknown function 'g'"));
  EXPECT_THAT(FirstError("fn f(x: int) -> int { return f(x); }"),
              HasSubstr("unknown function 'f'"));
  EXPECT_THAT(FirstError("fn f(x: real) -> int { return int(x, x); }"),
              HasSubstr("exactly one argument"));
  EXPECT_THAT(FirstError("fn f(a: array<int>) -> int { return a[1.0]; }"),
              HasSubstr("array index must be int"));
  EXPECT_THAT(FirstError("fn f(x: int) -> bool { return !x; }"),
              HasSubstr("operator ! expects bool"));
}

TEST(TypeCheckerTest, CollectsAllErrorsWithLocations) {
  try {
    TypeCheck(ParseProgram("fn f() -> int {\n  let a: int = true;\n"
                           "  return b;\n}\n",
                           "e.mini"));
    FAIL();
  } catch (const TypeErrors& e) {
    ASSERT_EQ(e.diagnostics().size(), 2u);
    EXPECT_EQ(e.diagnostics()[0].loc.line, 2);
    EXPECT_EQ(e.diagnostics()[1].loc.line, 3);
    EXPECT_THAT(e.what(), HasSubstr("e.mini:3:10"));
  }
}

TEST(TypeCheckerTest, ScopesAreLexical) {
  EXPECT_THAT(FirstError("fn f(x: int) -> int {\n"
                         "  if (x > 0) { let y: int = 1; }\n"
                         "  return y;\n}\n"),
              HasSubstr("unknown name 'y'"));
  // A name declared in one branch cannot be reused in the other either.
  EXPECT_THAT(FirstError("fn f(x: int) -> int {\n"
                         "  if (x > 0) { let y: int = 1; } else { let y: int = "
                         "2; }\n  return x;\n}\n"),
              HasSubstr("already declared"));
}

TEST(TypeCheckerTest, EmptyArrayTakesTypeFromContext) {
  TypedProgram p = Typed(
      "fn f() -> int { let a: array<real> = []; a = []; return len(a); }");
  const Stmt& decl = *p.program().functions[0].body->statements[0];
  EXPECT_EQ(decl.expr->type, Type::kRealArray);
  EXPECT_THAT(FirstError("fn f() -> int { return len([]); }"),
              HasSubstr("cannot infer"));
}

TEST(TypeCheckerTest, ObservablesListPrimitivesThenLengths) {
  auto c = LoadCorpus("percentile");
  int if_id = StmtAtLine(c.program, 12);
  std::vector<std::string> names;
  for (const auto& o : c.program.ObservablesAt(if_id)) names.push_back(o.name);
  EXPECT_THAT(names, ElementsAre("p", "n", "pos", "fpos", "int_pos", "dif",
                                 "len(values)", "len(sorted)"));
  std::vector<std::string> scope;
  for (const auto& v : c.program.ScopeAt(if_id)) scope.push_back(v.name);
  EXPECT_THAT(scope, ElementsAre("values", "p", "n", "pos", "fpos", "int_pos",
                                 "dif", "sorted"));
}

TEST(TypeCheckerTest, SkippableStatements) {
  auto c = LoadCorpus("guard");
  EXPECT_FALSE(c.program.IsSkippable(StmtAtLine(c.program, 2)));  // let
  EXPECT_TRUE(c.program.IsSkippable(StmtAtLine(c.program, 4)));   // while
  EXPECT_TRUE(c.program.IsSkippable(StmtAtLine(c.program, 6)));   // assign
  EXPECT_FALSE(c.program.IsSkippable(StmtAtLine(c.program, 7)));  // return
}

TEST(TypeCheckerTest, ConditionLookupsAreInverse) {
  auto c = LoadCorpus("tcas");
  for (int id : c.program.StatementIds()) {
    auto cond = c.program.ConditionOfIf(id);
    if (!cond) continue;
    EXPECT_EQ(c.program.IfOfCondition(*cond), id);
    EXPECT_EQ(c.program.FunctionOf(id)->name, "is_upward_preferred");
  }
  EXPECT_FALSE(c.program.IfOfCondition(StmtAtLine(c.program, 2)));
}

TEST(TypeCheckerTest, TypeCheckExpressionAgainstScope) {
  std::vector<ScopeVar> scope = {{"x", Type::kInt}, {"a", Type::kRealArray}};
  ExprPtr e = ParseExpression("x < len(a) && a[0] > 1.0");
  EXPECT_EQ(TypeCheckExpression(*e, scope), Type::kBool);
  ExprPtr bad = ParseExpression("x < 1.0");
  EXPECT_THROW(TypeCheckExpression(*bad, scope), TypeErrors);
}

}  // namespace
}  // namespace minipol
