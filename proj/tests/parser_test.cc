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

#include "minipol/parser.h"

#include <set>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "minipol/error.h"
#include "minipol/printer.h"

namespace minipol {
namespace {

using ::testing::HasSubstr;

constexpr char kSmall[] = R"(fn f(a: int, xs: array<real>) -> int {
  // comment
  let b: int = a * 2 + 1;
  if (b > 3 && !(a == 0)) {
    b = -b;
  } else {
    xs[0] = 1.5;
  }
  while (b < 10) { b = b + 1; }
  return b;
}
)";

TEST(ParserTest, ParsesFunctionHeader) {
  Program p = ParseProgram(kSmall, "small.mini");
  ASSERT_EQ(p.functions.size(), 1u);
  const Function& f = p.functions[0];
  EXPECT_EQ(f.name, "f");
  ASSERT_EQ(f.params.size(), 2u);
  EXPECT_EQ(f.params[1].name, "xs");
  EXPECT_EQ(f.params[1].type, Type::kRealArray);
  EXPECT_EQ(f.return_type, Type::kInt);
  EXPECT_EQ(f.body->statements.size(), 4u);
  EXPECT_EQ(p.file, "small.mini");
  EXPECT_EQ(p.source_lines.size(), 11u);
}

TEST(ParserTest, RecordsLinesAndColumns) {
  Program p = ParseProgram(kSmall);
  const Stmt& decl = *p.functions[0].body->statements[0];
  EXPECT_EQ(decl.loc.line, 3);
  EXPECT_EQ(decl.loc.col, 3);
  const Stmt& cond = *p.functions[0].body->statements[1];
  EXPECT_EQ(cond.kind, Stmt::Kind::kIf);
  EXPECT_EQ(cond.expr->loc.line, 4);
  EXPECT_EQ(cond.expr->loc.col, 7);
  EXPECT_EQ(cond.then_block->loc.col, 27);
}

TEST(ParserTest, PrecedenceAndAssociativity) {
  EXPECT_EQ(PrettyPrint(*ParseExpression("1 + 2 * 3")), "1 + 2 * 3");
  ExprPtr e = ParseExpression("a - b - c");
  ASSERT_EQ(e->kind, Expr::Kind::kBinary);
  EXPECT_EQ(e->args[0]->kind, Expr::Kind::kBinary);  // (a - b) - c
  e = ParseExpression("a || b && c");
  EXPECT_EQ(e->binary_op, BinaryOp::kOr);
  e = ParseExpression("x < y == true");
  EXPECT_EQ(e->binary_op, BinaryOp::kEq);
  e = ParseExpression("!a && b");
  EXPECT_EQ(e->binary_op, BinaryOp::kAnd);
}

TEST(ParserTest, NegativeNumericLiteralsAreFolded) {
  ExprPtr e = ParseExpression("-5");
  ASSERT_EQ(e->kind, Expr::Kind::kLiteral);
  EXPECT_EQ(e->literal, Value::Int(-5));
  e = ParseExpression("-9223372036854775808");
  ASSERT_EQ(e->kind, Expr::Kind::kLiteral);
  EXPECT_EQ(e->literal.AsInt(), INT64_MIN);
  e = ParseExpression("-x");
  EXPECT_EQ(e->kind, Expr::Kind::kUnary);
  e = ParseExpression("-2.5");
  EXPECT_EQ(e->literal, Value::Real(-2.5));
}

TEST(ParserTest, ArrayLiterals) {
  ExprPtr e = ParseExpression("[1, -2, 3]");
  EXPECT_EQ(e->literal, Value::IntArray({1, -2, 3}));
  e = ParseExpression("[]");
  EXPECT_TRUE(e->empty_array_literal);
  EXPECT_THROW(ParseExpression("[1, 2.0]"), ParseError);
  EXPECT_THROW(ParseExpression("[x]"), ParseError);
}

TEST(ParserTest, NodeIdsArePreorderAndUnique) {
  Program p = ParseProgram(kSmall);
  std::vector<int> ids;
  VisitStmts(*p.functions[0].body, [&](const Stmt& s) {
    ids.push_back(s.loc.node_id);
    for (const Expr* e : OwnExprs(s)) {
      VisitExprs(*e, [&](const Expr& x) { ids.push_back(x.loc.node_id); });
    }
  });
  std::set<int> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  EXPECT_EQ(*unique.begin(), 0);
  EXPECT_EQ(*unique.rbegin(), static_cast<int>(ids.size()) - 1);
  // The body block is numbered first and its first statement next.
  EXPECT_EQ(p.functions[0].body->loc.node_id, 0);
  EXPECT_EQ(p.functions[0].body->statements[0]->loc.node_id, 1);
}

TEST(ParserTest, NodeIdsContinueAcrossFunctions) {
  Program p = ParseProgram(
      "fn a() -> int { return 1; }\nfn b() -> int { return 2; }\n");
  EXPECT_LT(p.functions[0].body->statements[0]->loc.node_id,
            p.functions[1].body->loc.node_id);
}

TEST(ParserTest, SyntaxErrorsCarryLocations) {
  try {
    ParseProgram("fn f() -> int {\n  return 1\n}\n", "bad.mini");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostic().loc.line, 3);
    EXPECT_THAT(e.diagnostic().ToString(), HasSubstr("bad.mini:3:1"));
    EXPECT_THAT(e.what(), HasSubstr("expected ';'"));
  }
}

TEST(ParserTest, RejectsMalformedPrograms) {
  EXPECT_THROW(ParseProgram(""), ParseError);
  EXPECT_THROW(ParseProgram("fn f() -> int { return 1; } fn f() -> int { "
                            "return 2; }"),
               ParseError);
  EXPECT_THROW(ParseProgram("fn f() -> string { return 1; }"), ParseError);
  EXPECT_THROW(ParseProgram("fn f() -> int { return 1 $ 2; }"), ParseError);
  EXPECT_THROW(ParseProgram("fn f() -> int { return 99999999999999999999; }"),
               ParseError);
  EXPECT_THROW(ParseProgram("fn f() -> int { if (true) { return 1; "),
               ParseError);
}

TEST(ParserTest, ParseValueUsesTheExpectedType) {
  EXPECT_EQ(ParseValue("42", Type::kInt), Value::Int(42));
  EXPECT_EQ(ParseValue("-1.5", Type::kReal), Value::Real(-1.5));
  EXPECT_EQ(ParseValue("true", Type::kBool), Value::Bool(true));
  EXPECT_EQ(ParseValue("[]", Type::kIntArray), Value::IntArray({}));
  EXPECT_EQ(ParseValue("[2.0, 1.0]", Type::kRealArray),
            Value::RealArray({2.0, 1.0}));
  EXPECT_THROW(ParseValue("1", Type::kReal), InputError);
  EXPECT_THROW(ParseValue("1.0", Type::kInt), InputError);
  EXPECT_THROW(ParseValue("[1]", Type::kRealArray), InputError);
  EXPECT_THROW(ParseValue("x", Type::kInt), InputError);
  EXPECT_THROW(ParseValue("1 2", Type::kInt), InputError);
}

}  // namespace
}  // namespace minipol
