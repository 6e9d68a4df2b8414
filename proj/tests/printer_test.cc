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

#include "minipol/printer.h"

#include <random>

#include <gtest/gtest.h>

#include "minipol/parser.h"
#include "test_util.h"

namespace minipol {
namespace {

// Compares trees while ignoring positions, node ids and types.
bool SameShape(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Expr::Kind::kLiteral:
      if (a.literal != b.literal) return false;
      break;
    case Expr::Kind::kVar:
    case Expr::Kind::kCall:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case Expr::Kind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    case Expr::Kind::kIndex:
      break;
  }
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (!SameShape(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

class ExprGenerator {
 public:
  explicit ExprGenerator(uint32_t seed) : rng_(seed) {}

  ExprPtr Generate(int depth) {
    int choice = Pick(depth <= 0 ? 3 : 8);
    switch (choice) {
      case 0:
        return MakeLiteral(Value::Int(Pick(2001) - 1000));
      case 1:
        return MakeLiteral(Value::Real((Pick(2001) - 1000) / 8.0));
      case 2:
        return MakeVar(std::string(1, static_cast<char>('a' + Pick(5))));
      case 3: {
        ExprPtr operand = Generate(depth - 1);
        // A minus sign in front of a number is read back as a literal.
        if (operand->kind == Expr::Kind::kLiteral || Pick(2) == 0) {
          return MakeUnary(UnaryOp::kNot, std::move(operand));
        }
        return MakeUnary(UnaryOp::kNeg, std::move(operand));
      }
      case 4:
        return MakeIndex(MakeVar("xs"), Generate(depth - 1));
      case 5: {
        static const char* kBuiltins[] = {"len", "floor", "int", "real",
                                          "sort"};
        std::vector<ExprPtr> args;
        args.push_back(Generate(depth - 1));
        return MakeCall(kBuiltins[Pick(5)], std::move(args));
      }
      default: {
        auto op = static_cast<BinaryOp>(Pick(12));
        ExprPtr lhs = Generate(depth - 1);
        return MakeBinary(op, std::move(lhs), Generate(depth - 1));
      }
    }
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

TEST(PrinterTest, MinimalParentheses) {
  auto print = [](const char* text) {
    return PrettyPrint(*ParseExpression(text));
  };
  EXPECT_EQ(print("((a + b)) * c"), "(a + b) * c");
  EXPECT_EQ(print("a - (b - c)"), "a - (b - c)");
  EXPECT_EQ(print("(a - b) - c"), "a - b - c");
  EXPECT_EQ(print("!(a && b)"), "!(a && b)");
  EXPECT_EQ(print("-(x * 2)"), "-(x * 2)");
  EXPECT_EQ(print("(-1) * x"), "-1 * x");
  EXPECT_EQ(print("x - -1"), "x - -1");
  EXPECT_EQ(print("xs[i + 1]"), "xs[i + 1]");
  EXPECT_EQ(print("len(a)<=n||b"), "len(a) <= n || b");
}

TEST(PrinterTest, PrintsStatementsWithTwoSpaceIndent) {
  TypedProgram p = testing::Typed(
      "fn f(x: int) -> int { if (x > 0) { x = x - 1; } else { return 0; } "
      "while (x > 3) { x = x - 2; } return x; }");
  EXPECT_EQ(PrettyPrint(p.program()),
            "fn f(x: int) -> int {\n"
            "  if (x > 0) {\n"
            "    x = x - 1;\n"
            "  } else {\n"
            "    return 0;\n"
            "  }\n"
            "  while (x > 3) {\n"
            "    x = x - 2;\n"
            "  }\n"
            "  return x;\n"
            "}\n");
}

// print(parse(print(e))) == print(e) and the re-parsed tree matches e.
TEST(PrinterTest, ExpressionRoundTripProperty) {
  ExprGenerator gen(20261015);
  for (int i = 0; i < 3000; ++i) {
    ExprPtr e = gen.Generate(1 + i % 5);
    const std::string text = PrettyPrint(*e);
    ExprPtr back = ParseExpression(text);
    ASSERT_TRUE(SameShape(*e, *back)) << text << " re-parsed as "
                                      << PrettyPrint(*back);
    EXPECT_EQ(PrettyPrint(*back), text);
  }
}

// Printing a corpus program and parsing it again gives the same tree,
// node ids included.
TEST(PrinterTest, ProgramRoundTripKeepsStructureAndNodeIds) {
  for (const char* name : {"tcas", "percentile", "guard", "lonely"}) {
    auto c = testing::LoadCorpus(name);
    Program again = ParseProgram(PrettyPrint(c.program.program()));
    EXPECT_TRUE(StructurallyEqual(TypeCheck(std::move(again)).program(),
                                  c.program.program()))
        << name;
  }
}

}  // namespace
}  // namespace minipol
