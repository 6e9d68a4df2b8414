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

#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "lexer.h"
#include "minipol/error.h"

namespace minipol {

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  Program ParseProgram() {
    Program program;
    program.file = file_;
    std::set<std::string> names;
    while (!AtEnd()) {
      SourceLoc fn_loc = LocOf(Peek());
      Function f = ParseFunction();
      if (!names.insert(f.name).second) {
        Fail(fn_loc, "duplicate function name '" + f.name + "'");
      }
      program.functions.push_back(std::move(f));
    }
    if (program.functions.empty()) Fail(LocOf(Peek()), "no functions");
    return program;
  }

  ExprPtr ParseStandaloneExpression() {
    ExprPtr e = ParseExpr();
    if (!AtEnd()) Fail(LocOf(Peek()), "unexpected '" + Peek().text + "'");
    return e;
  }

  ExprPtr ParseStandaloneLiteral() {
    ExprPtr e;
    if (IsPunct("-") || Peek().kind == TokenKind::kInt ||
        Peek().kind == TokenKind::kReal) {
      e = ParseSignedNumber();
    } else if (IsKeyword("true") || IsKeyword("false")) {
      const Token& t = Next();
      e = MakeLiteral(Value::Bool(t.text == "true"));
    } else if (IsPunct("[")) {
      e = ParseArrayLiteral();
    } else {
      Fail(LocOf(Peek()), "expected a literal");
    }
    if (!AtEnd()) Fail(LocOf(Peek()), "unexpected '" + Peek().text + "'");
    return e;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const Token& Previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }
  bool IsPunct(const char* text) const {
    return Peek().kind == TokenKind::kPunct && Peek().text == text;
  }
  bool IsKeyword(const char* text) const {
    return Peek().kind == TokenKind::kKeyword && Peek().text == text;
  }
  SourceLoc LocOf(const Token& t) const {
    return SourceLoc{file_, t.pos.line, t.pos.col, -1};
  }
  [[noreturn]] void Fail(const SourceLoc& loc, const std::string& message) {
    throw ParseError(Diagnostic{loc, message});
  }
  void ExpectPunct(const char* text) {
    if (!IsPunct(text)) {
      Fail(LocOf(Peek()), std::string("expected '") + text + "' but found '" +
                              Describe(Peek()) + "'");
    }
    Next();
  }
  void ExpectKeyword(const char* text) {
    if (!IsKeyword(text)) {
      Fail(LocOf(Peek()), std::string("expected '") + text + "' but found '" +
                              Describe(Peek()) + "'");
    }
    Next();
  }
  std::string ExpectIdent(const char* what) {
    if (Peek().kind != TokenKind::kIdent) {
      Fail(LocOf(Peek()),
           std::string("expected ") + what + " but found '" + Describe(Peek()) +
               "'");
    }
    return Next().text;
  }
  static std::string Describe(const Token& t) {
    return t.kind == TokenKind::kEnd ? "end of input" : t.text;
  }

  Function ParseFunction() {
    Function f;
    f.loc = LocOf(Peek());
    ExpectKeyword("fn");
    f.name = ExpectIdent("function name");
    ExpectPunct("(");
    if (!IsPunct(")")) {
      do {
        Param p;
        p.name = ExpectIdent("parameter name");
        ExpectPunct(":");
        p.type = ParseType();
        f.params.push_back(std::move(p));
      } while (IsPunct(",") && (Next(), true));
    }
    ExpectPunct(")");
    ExpectPunct("->");
    f.return_type = ParseType();
    f.body = ParseBlock();
    return f;
  }

  Type ParseType() {
    SourceLoc loc = LocOf(Peek());
    std::string name = ExpectIdent("a type");
    if (name == "bool") return Type::kBool;
    if (name == "int") return Type::kInt;
    if (name == "real") return Type::kReal;
    if (name == "array") {
      ExpectPunct("<");
      std::string element = ExpectIdent("array element type");
      ExpectPunct(">");
      if (element == "int") return Type::kIntArray;
      if (element == "real") return Type::kRealArray;
      Fail(loc, "arrays hold int or real, not '" + element + "'");
    }
    Fail(loc, "unknown type '" + name + "'");
  }

  StmtPtr ParseBlock() {
    const Token& open = Peek();
    ExpectPunct("{");
    std::vector<StmtPtr> statements;
    while (!IsPunct("}")) {
      if (AtEnd()) Fail(LocOf(Peek()), "unterminated block");
      statements.push_back(ParseStatement());
    }
    Next();
    StmtPtr block = MakeBlock(std::move(statements));
    block->loc = LocOf(open);
    block->end = Previous().end;
    return block;
  }

  StmtPtr ParseStatement() {
    auto s = std::make_unique<Stmt>();
    s->loc = LocOf(Peek());
    if (IsKeyword("let")) {
      Next();
      s->kind = Stmt::Kind::kDecl;
      s->name = ExpectIdent("variable name");
      ExpectPunct(":");
      s->decl_type = ParseType();
      ExpectPunct("=");
      s->expr = ParseExpr();
      ExpectPunct(";");
    } else if (IsKeyword("if")) {
      Next();
      s->kind = Stmt::Kind::kIf;
      ExpectPunct("(");
      s->expr = ParseExpr();
      ExpectPunct(")");
      s->then_block = ParseBlock();
      if (IsKeyword("else")) {
        Next();
        s->else_block = ParseBlock();
      }
    } else if (IsKeyword("while")) {
      Next();
      s->kind = Stmt::Kind::kWhile;
      ExpectPunct("(");
      s->expr = ParseExpr();
      ExpectPunct(")");
      s->then_block = ParseBlock();
    } else if (IsKeyword("return")) {
      Next();
      s->kind = Stmt::Kind::kReturn;
      s->expr = ParseExpr();
      ExpectPunct(";");
    } else if (Peek().kind == TokenKind::kIdent) {
      s->kind = Stmt::Kind::kAssign;
      const Token& name = Next();
      ExprPtr target = MakeVar(name.text);
      target->loc = LocOf(name);
      target->end = name.end;
      if (IsPunct("[")) {
        Next();
        ExprPtr index = ParseExpr();
        ExpectPunct("]");
        SourceLoc loc = target->loc;
        target = MakeIndex(std::move(target), std::move(index));
        target->loc = loc;
        target->end = Previous().end;
      }
      s->target = std::move(target);
      ExpectPunct("=");
      s->expr = ParseExpr();
      ExpectPunct(";");
    } else {
      Fail(LocOf(Peek()), "expected a statement but found '" +
                              Describe(Peek()) + "'");
    }
    s->end = Previous().end;
    return s;
  }

  // Precedence climbing: || < && < comparisons < + - < * / < unary < postfix.
  ExprPtr ParseExpr() { return ParseOr(); }

  ExprPtr FinishBinary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    SourceLoc loc = lhs->loc;
    SourcePos end = rhs->end;
    ExprPtr e = MakeBinary(op, std::move(lhs), std::move(rhs));
    e->loc = loc;
    e->end = end;
    return e;
  }

  ExprPtr ParseOr() {
    ExprPtr lhs = ParseAnd();
    while (IsPunct("||")) {
      Next();
      lhs = FinishBinary(BinaryOp::kOr, std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  ExprPtr ParseAnd() {
    ExprPtr lhs = ParseComparison();
    while (IsPunct("&&")) {
      Next();
      lhs = FinishBinary(BinaryOp::kAnd, std::move(lhs), ParseComparison());
    }
    return lhs;
  }

  ExprPtr ParseComparison() {
    ExprPtr lhs = ParseAdditive();
    while (true) {
      BinaryOp op;
      if (IsPunct("<")) {
        op = BinaryOp::kLt;
      } else if (IsPunct("<=")) {
        op = BinaryOp::kLe;
      } else if (IsPunct(">")) {
        op = BinaryOp::kGt;
      } else if (IsPunct(">=")) {
        op = BinaryOp::kGe;
      } else if (IsPunct("==")) {
        op = BinaryOp::kEq;
      } else if (IsPunct("!=")) {
        op = BinaryOp::kNe;
      } else {
        return lhs;
      }
      Next();
      lhs = FinishBinary(op, std::move(lhs), ParseAdditive());
    }
  }

  ExprPtr ParseAdditive() {
    ExprPtr lhs = ParseMultiplicative();
    while (IsPunct("+") || IsPunct("-")) {
      BinaryOp op = Next().text == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = FinishBinary(op, std::move(lhs), ParseMultiplicative());
    }
    return lhs;
  }

  ExprPtr ParseMultiplicative() {
    ExprPtr lhs = ParseUnary();
    while (IsPunct("*") || IsPunct("/")) {
      BinaryOp op = Next().text == "*" ? BinaryOp::kMul : BinaryOp::kDiv;
      lhs = FinishBinary(op, std::move(lhs), ParseUnary());
    }
    return lhs;
  }

  ExprPtr ParseUnary() {
    if (IsPunct("!")) {
      SourceLoc loc = LocOf(Next());
      ExprPtr operand = ParseUnary();
      SourcePos end = operand->end;
      ExprPtr e = MakeUnary(UnaryOp::kNot, std::move(operand));
      e->loc = loc;
      e->end = end;
      return e;
    }
    if (IsPunct("-")) {
      if (Peek(1).kind == TokenKind::kInt || Peek(1).kind == TokenKind::kReal) {
        return ParseSignedNumber();
      }
      SourceLoc loc = LocOf(Next());
      ExprPtr operand = ParseUnary();
      SourcePos end = operand->end;
      // Negated numeric literals are folded so that printing a negative
      // literal and re-parsing it yields the same tree.
      if (operand->kind == Expr::Kind::kLiteral) {
        if (operand->literal.type() == Type::kInt) {
          int64_t v = operand->literal.AsInt();
          if (v == INT64_MIN) Fail(loc, "integer literal out of range");
          operand->literal = Value::Int(-v);
          operand->loc = loc;
          return operand;
        }
        if (operand->literal.type() == Type::kReal) {
          operand->literal = Value::Real(-operand->literal.AsReal());
          operand->loc = loc;
          return operand;
        }
      }
      ExprPtr e = MakeUnary(UnaryOp::kNeg, std::move(operand));
      e->loc = loc;
      e->end = end;
      return e;
    }
    return ParsePostfix();
  }

  ExprPtr ParsePostfix() {
    ExprPtr e = ParsePrimary();
    while (IsPunct("[")) {
      Next();
      ExprPtr index = ParseExpr();
      ExpectPunct("]");
      SourceLoc loc = e->loc;
      e = MakeIndex(std::move(e), std::move(index));
      e->loc = loc;
      e->end = Previous().end;
    }
    return e;
  }

  ExprPtr ParseSignedNumber() {
    SourceLoc loc = LocOf(Peek());
    bool negative = false;
    if (IsPunct("-")) {
      negative = true;
      Next();
    }
    const Token& t = Next();
    std::string text = (negative ? "-" : "") + t.text;
    ExprPtr e;
    if (t.kind == TokenKind::kInt) {
      int64_t v = 0;
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        Fail(loc, "integer literal out of range: " + text);
      }
      e = MakeLiteral(Value::Int(v));
    } else if (t.kind == TokenKind::kReal) {
      e = MakeLiteral(Value::Real(std::strtod(text.c_str(), nullptr)));
    } else {
      Fail(LocOf(t), "expected a number but found '" + Describe(t) + "'");
    }
    e->loc = loc;
    e->end = t.end;
    return e;
  }

  ExprPtr ParseArrayLiteral() {
    SourceLoc loc = LocOf(Peek());
    ExpectPunct("[");
    std::vector<int64_t> ints;
    std::vector<double> reals;
    bool any_int = false;
    bool any_real = false;
    if (!IsPunct("]")) {
      do {
        ExprPtr element = ParseSignedNumber();
        if (element->literal.type() == Type::kInt) {
          any_int = true;
          ints.push_back(element->literal.AsInt());
        } else {
          any_real = true;
          reals.push_back(element->literal.AsReal());
        }
      } while (IsPunct(",") && (Next(), true));
    }
    ExpectPunct("]");
    if (any_int && any_real) {
      Fail(loc, "array literal mixes int and real elements");
    }
    ExprPtr e = any_real ? MakeLiteral(Value::RealArray(std::move(reals)))
                         : MakeLiteral(Value::IntArray(std::move(ints)));
    e->empty_array_literal = !any_int && !any_real;
    e->loc = loc;
    e->end = Previous().end;
    return e;
  }

  ExprPtr ParsePrimary() {
    const Token& t = Peek();
    SourceLoc loc = LocOf(t);
    if (t.kind == TokenKind::kInt || t.kind == TokenKind::kReal) {
      return ParseSignedNumber();
    }
    if (IsKeyword("true") || IsKeyword("false")) {
      Next();
      ExprPtr e = MakeLiteral(Value::Bool(t.text == "true"));
      e->loc = loc;
      e->end = t.end;
      return e;
    }
    if (IsPunct("[")) return ParseArrayLiteral();
    if (IsPunct("(")) {
      Next();
      ExprPtr e = ParseExpr();
      ExpectPunct(")");
      return e;
    }
    if (t.kind == TokenKind::kIdent) {
      Next();
      if (IsPunct("(")) {
        Next();
        std::vector<ExprPtr> args;
        if (!IsPunct(")")) {
          do {
            args.push_back(ParseExpr());
          } while (IsPunct(",") && (Next(), true));
        }
        ExpectPunct(")");
        ExprPtr e = MakeCall(t.text, std::move(args));
        e->loc = loc;
        e->end = Previous().end;
        return e;
      }
      ExprPtr e = MakeVar(t.text);
      e->loc = loc;
      e->end = t.end;
      return e;
    }
    Fail(loc, "expected an expression but found '" + Describe(t) + "'");
  }

  std::vector<Token> tokens_;
  std::string file_;
  size_t pos_ = 0;
};

std::vector<std::string> SplitLines(std::string_view source) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : source) {
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

void NumberFrom(Expr& e, int& next) {
  e.loc.node_id = next++;
  for (auto& a : e.args) NumberFrom(*a, next);
}

}  // namespace

Program ParseProgram(std::string_view source, const std::string& file) {
  Parser parser(Tokenize(source, file), file);
  Program program = parser.ParseProgram();
  program.source_lines = SplitLines(source);
  AssignNodeIds(program);
  return program;
}

ExprPtr ParseExpression(std::string_view text) {
  Parser parser(Tokenize(text, "<expr>"), "<expr>");
  ExprPtr e = parser.ParseStandaloneExpression();
  int next = 0;
  NumberFrom(*e, next);
  return e;
}

Value ParseValue(std::string_view text, Type expected) {
  ExprPtr e;
  try {
    Parser parser(Tokenize(text, "<value>"), "<value>");
    e = parser.ParseStandaloneLiteral();
  } catch (const ParseError& err) {
    throw InputError("bad " + TypeName(expected) + " literal '" +
                     std::string(text) + "': " + err.diagnostic().message);
  }
  if (e->empty_array_literal && IsArray(expected)) {
    return Value::EmptyArray(expected);
  }
  if (e->literal.type() != expected) {
    throw InputError("literal '" + std::string(text) + "' has type " +
                     TypeName(e->literal.type()) + ", expected " +
                     TypeName(expected));
  }
  return e->literal;
}

}  // namespace minipol
