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

#ifndef MINIPOL_AST_H_
#define MINIPOL_AST_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minipol/value.h"

namespace minipol {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct SourceLoc {
  std::string file;
  int line = 0;
  int col = 0;
  // Preorder index within the program; identical text gives identical ids.
  int node_id = -1;
};

enum class UnaryOp { kNot, kNeg };
enum class BinaryOp {
  kOr,
  kAnd,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAdd,
  kSub,
  kMul,
  kDiv,
};

std::string OpText(UnaryOp op);
std::string OpText(BinaryOp op);
bool IsComparison(BinaryOp op);
bool IsArithmetic(BinaryOp op);
bool IsLogical(BinaryOp op);
// a OP b == b Mirror(OP) a.
BinaryOp Mirror(BinaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { kLiteral, kVar, kUnary, kBinary, kIndex, kCall };

  Kind kind = Kind::kLiteral;
  Value literal;
  std::string name;  // variable or built-in name
  UnaryOp unary_op = UnaryOp::kNot;
  BinaryOp binary_op = BinaryOp::kAdd;
  // unary: [operand]; binary: [lhs, rhs]; index: [array, index]; call: args.
  std::vector<ExprPtr> args;
  std::optional<Type> type;
  SourceLoc loc;
  SourcePos end;
  // `[]` parsed without an element type; the checker fixes it from context.
  bool empty_array_literal = false;
};

ExprPtr MakeLiteral(Value value);
ExprPtr MakeVar(std::string name);
ExprPtr MakeUnary(UnaryOp op, ExprPtr operand);
ExprPtr MakeBinary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr MakeIndex(ExprPtr array, ExprPtr index);
ExprPtr MakeCall(std::string builtin, std::vector<ExprPtr> args);

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
  enum class Kind { kDecl, kAssign, kIf, kWhile, kReturn, kBlock };

  Kind kind = Kind::kBlock;
  // decl
  std::string name;
  Type decl_type = Type::kInt;
  // assign: target is a kVar or kIndex expression.
  ExprPtr target;
  // decl initializer, assigned value, if/while condition, returned value.
  ExprPtr expr;
  // block contents
  std::vector<StmtPtr> statements;
  // if: then_block/else_block (else may be null); while: then_block is body.
  StmtPtr then_block;
  StmtPtr else_block;
  SourceLoc loc;
  SourcePos end;
};

StmtPtr MakeBlock(std::vector<StmtPtr> statements);

struct Param {
  std::string name;
  Type type = Type::kInt;
};

struct Function {
  std::string name;
  std::vector<Param> params;
  Type return_type = Type::kInt;
  StmtPtr body;  // kBlock
  SourceLoc loc;
};

struct Program {
  std::string file;
  std::vector<Function> functions;
  // Original text split into lines; empty for synthesized programs.
  std::vector<std::string> source_lines;

  const Function* FindFunction(const std::string& name) const;
};

ExprPtr Clone(const Expr& expr);
StmtPtr Clone(const Stmt& stmt);
Program Clone(const Program& program);

// Renumbers every statement and expression in preorder.
void AssignNodeIds(Program& program);

// Structure, operators, literals, names, types and node ids must match;
// line/col are ignored.
bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const Stmt& a, const Stmt& b);
bool StructurallyEqual(const Program& a, const Program& b);

// Preorder visitors.
void VisitExprs(const Expr& expr, const std::function<void(const Expr&)>& fn);
void VisitStmts(const Stmt& stmt, const std::function<void(const Stmt&)>& fn);
// Every expression directly owned by a statement (not by its children).
std::vector<const Expr*> OwnExprs(const Stmt& stmt);

}  // namespace minipol

#endif  // MINIPOL_AST_H_
