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

#include "minipol/ast.h"

#include <stdexcept>

namespace minipol {

std::string OpText(UnaryOp op) { return op == UnaryOp::kNot ? "!" : "-"; }

std::string OpText(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return "||";
    case BinaryOp::kAnd:
      return "&&";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kEq:
      return "==";
    case BinaryOp::kNe:
      return "!=";
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
    case BinaryOp::kDiv:
      return "/";
  }
  return "?";
}

bool IsComparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return true;
    default:
      return false;
  }
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub ||
         op == BinaryOp::kMul || op == BinaryOp::kDiv;
}

bool IsLogical(BinaryOp op) {
  return op == BinaryOp::kAnd || op == BinaryOp::kOr;
}

BinaryOp Mirror(BinaryOp op) {
  switch (op) {
    case BinaryOp::kLt:
      return BinaryOp::kGt;
    case BinaryOp::kGt:
      return BinaryOp::kLt;
    case BinaryOp::kLe:
      return BinaryOp::kGe;
    case BinaryOp::kGe:
      return BinaryOp::kLe;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return op;
    default:
      throw std::logic_error("Mirror of non-comparison " + OpText(op));
  }
}

ExprPtr MakeLiteral(Value value) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kLiteral;
  e->literal = std::move(value);
  return e;
}

ExprPtr MakeVar(std::string name) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kVar;
  e->name = std::move(name);
  return e;
}

ExprPtr MakeUnary(UnaryOp op, ExprPtr operand) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kUnary;
  e->unary_op = op;
  e->args.push_back(std::move(operand));
  return e;
}

ExprPtr MakeBinary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kBinary;
  e->binary_op = op;
  e->args.push_back(std::move(lhs));
  e->args.push_back(std::move(rhs));
  return e;
}

ExprPtr MakeIndex(ExprPtr array, ExprPtr index) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kIndex;
  e->args.push_back(std::move(array));
  e->args.push_back(std::move(index));
  return e;
}

ExprPtr MakeCall(std::string builtin, std::vector<ExprPtr> args) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::kCall;
  e->name = std::move(builtin);
  e->args = std::move(args);
  return e;
}

StmtPtr MakeBlock(std::vector<StmtPtr> statements) {
  auto s = std::make_unique<Stmt>();
  s->kind = Stmt::Kind::kBlock;
  s->statements = std::move(statements);
  return s;
}

const Function* Program::FindFunction(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

ExprPtr Clone(const Expr& expr) {
  auto e = std::make_unique<Expr>();
  e->kind = expr.kind;
  e->literal = expr.literal;
  e->name = expr.name;
  e->unary_op = expr.unary_op;
  e->binary_op = expr.binary_op;
  for (const auto& a : expr.args) e->args.push_back(Clone(*a));
  e->type = expr.type;
  e->loc = expr.loc;
  e->end = expr.end;
  e->empty_array_literal = expr.empty_array_literal;
  return e;
}

StmtPtr Clone(const Stmt& stmt) {
  auto s = std::make_unique<Stmt>();
  s->kind = stmt.kind;
  s->name = stmt.name;
  s->decl_type = stmt.decl_type;
  if (stmt.target) s->target = Clone(*stmt.target);
  if (stmt.expr) s->expr = Clone(*stmt.expr);
  for (const auto& c : stmt.statements) s->statements.push_back(Clone(*c));
  if (stmt.then_block) s->then_block = Clone(*stmt.then_block);
  if (stmt.else_block) s->else_block = Clone(*stmt.else_block);
  s->loc = stmt.loc;
  s->end = stmt.end;
  return s;
}

Program Clone(const Program& program) {
  Program p;
  p.file = program.file;
  p.source_lines = program.source_lines;
  for (const auto& f : program.functions) {
    Function g;
    g.name = f.name;
    g.params = f.params;
    g.return_type = f.return_type;
    g.body = Clone(*f.body);
    g.loc = f.loc;
    p.functions.push_back(std::move(g));
  }
  return p;
}

namespace {

void NumberExpr(Expr& e, int& next) {
  e.loc.node_id = next++;
  for (auto& a : e.args) NumberExpr(*a, next);
}

void NumberStmt(Stmt& s, int& next) {
  s.loc.node_id = next++;
  if (s.target) NumberExpr(*s.target, next);
  if (s.expr) NumberExpr(*s.expr, next);
  for (auto& c : s.statements) NumberStmt(*c, next);
  if (s.then_block) NumberStmt(*s.then_block, next);
  if (s.else_block) NumberStmt(*s.else_block, next);
}

bool EqualOptional(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return StructurallyEqual(*a, *b);
}

bool EqualOptional(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  return StructurallyEqual(*a, *b);
}

}  // namespace

void AssignNodeIds(Program& program) {
  int next = 0;
  for (auto& f : program.functions) NumberStmt(*f.body, next);
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.loc.node_id != b.loc.node_id ||
      a.type != b.type || a.args.size() != b.args.size()) {
    return false;
  }
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
    if (!StructurallyEqual(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

bool StructurallyEqual(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.loc.node_id != b.loc.node_id ||
      a.statements.size() != b.statements.size()) {
    return false;
  }
  if (a.kind == Stmt::Kind::kDecl &&
      (a.name != b.name || a.decl_type != b.decl_type)) {
    return false;
  }
  if (!EqualOptional(a.target, b.target) || !EqualOptional(a.expr, b.expr) ||
      !EqualOptional(a.then_block, b.then_block) ||
      !EqualOptional(a.else_block, b.else_block)) {
    return false;
  }
  for (size_t i = 0; i < a.statements.size(); ++i) {
    if (!StructurallyEqual(*a.statements[i], *b.statements[i])) return false;
  }
  return true;
}

bool StructurallyEqual(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (size_t i = 0; i < a.functions.size(); ++i) {
    const auto& f = a.functions[i];
    const auto& g = b.functions[i];
    if (f.name != g.name || f.return_type != g.return_type ||
        f.params.size() != g.params.size()) {
      return false;
    }
    for (size_t j = 0; j < f.params.size(); ++j) {
      if (f.params[j].name != g.params[j].name ||
          f.params[j].type != g.params[j].type) {
        return false;
      }
    }
    if (!StructurallyEqual(*f.body, *g.body)) return false;
  }
  return true;
}

void VisitExprs(const Expr& expr,
                const std::function<void(const Expr&)>& fn) {
  fn(expr);
  for (const auto& a : expr.args) VisitExprs(*a, fn);
}

void VisitStmts(const Stmt& stmt,
                const std::function<void(const Stmt&)>& fn) {
  fn(stmt);
  for (const auto& c : stmt.statements) VisitStmts(*c, fn);
  if (stmt.then_block) VisitStmts(*stmt.then_block, fn);
  if (stmt.else_block) VisitStmts(*stmt.else_block, fn);
}

std::vector<const Expr*> OwnExprs(const Stmt& stmt) {
  std::vector<const Expr*> out;
  if (stmt.target) out.push_back(stmt.target.get());
  if (stmt.expr) out.push_back(stmt.expr.get());
  return out;
}

}  // namespace minipol
