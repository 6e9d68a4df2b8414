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

#include <cmath>

namespace minipol {

namespace {

constexpr int kPrecOr = 1;
constexpr int kPrecAnd = 2;
constexpr int kPrecCompare = 3;
constexpr int kPrecAdd = 4;
constexpr int kPrecMul = 5;
constexpr int kPrecUnary = 6;
constexpr int kPrecPostfix = 7;
constexpr int kPrecAtom = 8;

int Precedence(BinaryOp op) {
  if (op == BinaryOp::kOr) return kPrecOr;
  if (op == BinaryOp::kAnd) return kPrecAnd;
  if (IsComparison(op)) return kPrecCompare;
  if (op == BinaryOp::kAdd || op == BinaryOp::kSub) return kPrecAdd;
  return kPrecMul;
}

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kLiteral: {
      // A negative number prints with a leading '-'.
      Type t = e.literal.type();
      if ((t == Type::kInt && e.literal.AsInt() < 0) ||
          (t == Type::kReal && std::signbit(e.literal.AsReal()))) {
        return kPrecUnary;
      }
      return kPrecAtom;
    }
    case Expr::Kind::kVar:
    case Expr::Kind::kCall:
      return kPrecAtom;
    case Expr::Kind::kIndex:
      return kPrecPostfix;
    case Expr::Kind::kUnary:
      return kPrecUnary;
    case Expr::Kind::kBinary:
      return Precedence(e.binary_op);
  }
  return kPrecAtom;
}

std::string Wrap(const Expr& e, bool parens) {
  std::string text = PrettyPrint(e);
  return parens ? "(" + text + ")" : text;
}

void AppendBlock(const Stmt& block, int indent, std::string& out) {
  out += "{\n";
  for (const auto& s : block.statements) out += PrettyPrint(*s, indent + 1);
  out += std::string(indent * 2, ' ') + "}";
}

}  // namespace

std::string PrettyPrint(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return ToLiteral(e.literal);
    case Expr::Kind::kVar:
      return e.name;
    case Expr::Kind::kUnary:
      return OpText(e.unary_op) +
             Wrap(*e.args[0], Precedence(*e.args[0]) < kPrecUnary);
    case Expr::Kind::kBinary: {
      int p = Precedence(e.binary_op);
      return Wrap(*e.args[0], Precedence(*e.args[0]) < p) + " " +
             OpText(e.binary_op) + " " +
             Wrap(*e.args[1], Precedence(*e.args[1]) <= p);
    }
    case Expr::Kind::kIndex:
      return Wrap(*e.args[0], Precedence(*e.args[0]) < kPrecPostfix) + "[" +
             PrettyPrint(*e.args[1]) + "]";
    case Expr::Kind::kCall: {
      std::string out = e.name + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += PrettyPrint(*e.args[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::string PrettyPrint(const Stmt& s, int indent) {
  std::string pad(indent * 2, ' ');
  std::string out = pad;
  switch (s.kind) {
    case Stmt::Kind::kDecl:
      out += "let " + s.name + ": " + TypeName(s.decl_type) + " = " +
             PrettyPrint(*s.expr) + ";\n";
      break;
    case Stmt::Kind::kAssign:
      out += PrettyPrint(*s.target) + " = " + PrettyPrint(*s.expr) + ";\n";
      break;
    case Stmt::Kind::kIf:
      out += "if (" + PrettyPrint(*s.expr) + ") ";
      AppendBlock(*s.then_block, indent, out);
      if (s.else_block) {
        out += " else ";
        AppendBlock(*s.else_block, indent, out);
      }
      out += "\n";
      break;
    case Stmt::Kind::kWhile:
      out += "while (" + PrettyPrint(*s.expr) + ") ";
      AppendBlock(*s.then_block, indent, out);
      out += "\n";
      break;
    case Stmt::Kind::kReturn:
      out += "return " + PrettyPrint(*s.expr) + ";\n";
      break;
    case Stmt::Kind::kBlock:
      AppendBlock(s, indent, out);
      out += "\n";
      break;
  }
  return out;
}

std::string PrettyPrint(const Program& program) {
  std::string out;
  for (size_t i = 0; i < program.functions.size(); ++i) {
    const Function& f = program.functions[i];
    if (i) out += "\n";
    out += "fn " + f.name + "(";
    for (size_t j = 0; j < f.params.size(); ++j) {
      if (j) out += ", ";
      out += f.params[j].name + ": " + TypeName(f.params[j].type);
    }
    out += ") -> " + TypeName(f.return_type) + " ";
    AppendBlock(*f.body, 0, out);
    out += "\n";
  }
  return out;
}

}  // namespace minipol
