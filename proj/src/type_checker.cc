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

#include <set>

#include "minipol/error.h"

namespace minipol {

namespace {

class Checker {
 public:
  explicit Checker(std::vector<Diagnostic>& diagnostics)
      : diagnostics_(diagnostics) {}

  void SetScope(const std::vector<ScopeVar>& scope) {
    visible_ = scope;
    for (const auto& v : scope) declared_.insert(v.name);
  }

  void CheckFunction(Function& f) {
    visible_.clear();
    declared_.clear();
    function_ = &f;
    for (const auto& p : f.params) {
      if (!declared_.insert(p.name).second) {
        Error(f.loc, "duplicate parameter '" + p.name + "'");
      }
      visible_.push_back({p.name, p.type});
    }
    CheckBlock(*f.body);
    if (!AlwaysReturns(*f.body)) {
      Error(f.loc, "function '" + f.name + "' may finish without returning");
    }
  }

  std::optional<Type> CheckExpr(Expr& e, std::optional<Type> context) {
    std::optional<Type> t = Infer(e, context);
    e.type = t;
    return t;
  }

  // Scope snapshots keyed by statement node id.
  std::unordered_map<int, std::vector<ScopeVar>> scopes;

 private:
  void Error(const SourceLoc& loc, std::string message) {
    diagnostics_.push_back(Diagnostic{loc, std::move(message)});
  }

  const ScopeVar* Lookup(const std::string& name) const {
    for (const auto& v : visible_) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }

  void CheckBlock(Stmt& block) {
    scopes[block.loc.node_id] = visible_;
    size_t mark = visible_.size();
    for (auto& s : block.statements) CheckStmt(*s);
    visible_.resize(mark);
  }

  void ExpectType(const Expr& e, std::optional<Type> actual, Type expected,
                  const std::string& what) {
    if (actual && *actual != expected) {
      Error(e.loc, what + " has type " + TypeName(*actual) + ", expected " +
                       TypeName(expected));
    }
  }

  void CheckStmt(Stmt& s) {
    scopes[s.loc.node_id] = visible_;
    switch (s.kind) {
      case Stmt::Kind::kDecl: {
        auto t = CheckExpr(*s.expr, s.decl_type);
        ExpectType(*s.expr, t, s.decl_type,
                   "initializer of '" + s.name + "'");
        if (!declared_.insert(s.name).second) {
          Error(s.loc, "'" + s.name +
                           "' is already declared in this function "
                           "(shadowing is not allowed)");
        }
        visible_.push_back({s.name, s.decl_type});
        break;
      }
      case Stmt::Kind::kAssign: {
        std::optional<Type> target_type;
        Expr& target = *s.target;
        if (target.kind == Expr::Kind::kVar) {
          const ScopeVar* v = Lookup(target.name);
          if (!v) {
            Error(target.loc, "unknown name '" + target.name + "'");
          } else {
            target_type = v->type;
          }
          target.type = target_type;
        } else {
          target_type = CheckExpr(target, std::nullopt);
        }
        auto t = CheckExpr(*s.expr, target_type);
        if (target_type) ExpectType(*s.expr, t, *target_type, "assigned value");
        break;
      }
      case Stmt::Kind::kIf:
      case Stmt::Kind::kWhile: {
        auto t = CheckExpr(*s.expr, Type::kBool);
        if (t && *t != Type::kBool) {
          Error(s.expr->loc,
                "condition must be BOOL, found " + TypeName(*t));
        }
        CheckBlock(*s.then_block);
        if (s.else_block) CheckBlock(*s.else_block);
        break;
      }
      case Stmt::Kind::kReturn: {
        auto t = CheckExpr(*s.expr, function_->return_type);
        ExpectType(*s.expr, t, function_->return_type, "returned value");
        break;
      }
      case Stmt::Kind::kBlock:
        CheckBlock(s);
        break;
    }
  }

  static bool AlwaysReturns(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::kReturn:
        return true;
      case Stmt::Kind::kIf:
        return s.else_block && AlwaysReturns(*s.then_block) &&
               AlwaysReturns(*s.else_block);
      case Stmt::Kind::kBlock:
        for (const auto& c : s.statements) {
          if (AlwaysReturns(*c)) return true;
        }
        return false;
      default:
        return false;
    }
  }

  std::optional<Type> Infer(Expr& e, std::optional<Type> context) {
    switch (e.kind) {
      case Expr::Kind::kLiteral:
        if (e.empty_array_literal) {
          if (context && IsArray(*context)) {
            e.literal = Value::EmptyArray(*context);
            return *context;
          }
          Error(e.loc, "cannot infer the element type of '[]' here");
          return std::nullopt;
        }
        return e.literal.type();
      case Expr::Kind::kVar: {
        const ScopeVar* v = Lookup(e.name);
        if (!v) {
          Error(e.loc, "unknown name '" + e.name + "'");
          return std::nullopt;
        }
        return v->type;
      }
      case Expr::Kind::kUnary: {
        auto t = CheckExpr(*e.args[0], std::nullopt);
        if (!t) return std::nullopt;
        if (e.unary_op == UnaryOp::kNot) {
          if (*t != Type::kBool) {
            Error(e.loc, "operator ! expects bool, got " + TypeName(*t));
            return std::nullopt;
          }
          return Type::kBool;
        }
        if (!IsNumeric(*t)) {
          Error(e.loc, "unary - expects int or real, got " + TypeName(*t));
          return std::nullopt;
        }
        return t;
      }
      case Expr::Kind::kBinary:
        return InferBinary(e);
      case Expr::Kind::kIndex: {
        auto a = CheckExpr(*e.args[0], std::nullopt);
        auto i = CheckExpr(*e.args[1], Type::kInt);
        if (!a || !i) return std::nullopt;
        if (!IsArray(*a)) {
          Error(e.loc, "cannot index a value of type " + TypeName(*a));
          return std::nullopt;
        }
        if (*i != Type::kInt) {
          Error(e.args[1]->loc, "array index must be int, got " + TypeName(*i));
          return std::nullopt;
        }
        return ElementType(*a);
      }
      case Expr::Kind::kCall:
        return InferCall(e);
    }
    return std::nullopt;
  }

  std::optional<Type> InferBinary(Expr& e) {
    auto l = CheckExpr(*e.args[0], std::nullopt);
    auto r = CheckExpr(*e.args[1], l);
    if (!l || !r) return std::nullopt;
    const std::string op = OpText(e.binary_op);
    if (IsLogical(e.binary_op)) {
      if (*l != Type::kBool || *r != Type::kBool) {
        Error(e.loc, "operator " + op + " expects bool operands, got " +
                         TypeName(*l) + " and " + TypeName(*r));
        return std::nullopt;
      }
      return Type::kBool;
    }
    if (!IsNumeric(*l) || *l != *r) {
      Error(e.loc, "operator " + op +
                       " expects two int or two real operands, got " +
                       TypeName(*l) + " and " + TypeName(*r));
      return std::nullopt;
    }
    return IsComparison(e.binary_op) ? Type::kBool : *l;
  }

  std::optional<Type> InferCall(Expr& e) {
    std::vector<std::optional<Type>> args;
    for (auto& a : e.args) args.push_back(CheckExpr(*a, std::nullopt));
    for (const auto& a : args) {
      if (!a) return std::nullopt;
    }
    auto expect_one = [&](const char* what) {
      if (e.args.size() != 1) {
        Error(e.loc, e.name + "() takes exactly one argument (" + what + ")");
        return false;
      }
      return true;
    };
    if (e.name == "len" || e.name == "sort") {
      if (!expect_one("an array")) return std::nullopt;
      if (!IsArray(*args[0])) {
        Error(e.loc, e.name + "() expects an array, got " + TypeName(*args[0]));
        return std::nullopt;
      }
      return e.name == "len" ? Type::kInt : *args[0];
    }
    if (e.name == "floor" || e.name == "int") {
      if (!expect_one("a real")) return std::nullopt;
      if (*args[0] != Type::kReal) {
        Error(e.loc, e.name + "() expects real, got " + TypeName(*args[0]));
        return std::nullopt;
      }
      return e.name == "floor" ? Type::kReal : Type::kInt;
    }
    if (e.name == "real") {
      if (!expect_one("an int")) return std::nullopt;
      if (*args[0] != Type::kInt) {
        Error(e.loc, "real() expects int, got " + TypeName(*args[0]));
        return std::nullopt;
      }
      return Type::kReal;
    }
    Error(e.loc, "unknown function '" + e.name +
                     "' (only the built-ins len, floor, int, real and sort "
                     "may be called)");
    return std::nullopt;
  }

  std::vector<Diagnostic>& diagnostics_;
  const Function* function_ = nullptr;
  std::vector<ScopeVar> visible_;
  std::set<std::string> declared_;
};

}  // namespace

std::vector<ObservedValue> ObservablesOf(const std::vector<ScopeVar>& scope) {
  std::vector<ObservedValue> out;
  for (const auto& v : scope) {
    if (!IsArray(v.type)) out.push_back({v.name, v.type, v.name, false});
  }
  for (const auto& v : scope) {
    if (IsArray(v.type)) {
      out.push_back({"len(" + v.name + ")", Type::kInt, v.name, true});
    }
  }
  return out;
}

TypedProgram TypeCheck(Program program) {
  std::vector<Diagnostic> diagnostics;
  Checker checker(diagnostics);
  for (auto& f : program.functions) checker.CheckFunction(f);
  if (!diagnostics.empty()) throw TypeErrors(std::move(diagnostics));

  TypedProgram typed;
  typed.program_ = std::make_shared<const Program>(std::move(program));
  for (const auto& f : typed.program_->functions) {
    VisitStmts(*f.body, [&](const Stmt& s) {
      int id = s.loc.node_id;
      typed.stmts_[id] = &s;
      typed.function_of_[id] = &f;
      if (s.kind != Stmt::Kind::kBlock) typed.statement_ids_.push_back(id);
      auto& scope = checker.scopes[id];
      typed.observables_[id] = ObservablesOf(scope);
      typed.scopes_[id] = std::move(scope);
      if (s.kind == Stmt::Kind::kIf) {
        typed.if_of_condition_[s.expr->loc.node_id] = id;
        typed.condition_of_if_[id] = s.expr->loc.node_id;
      }
      for (const Expr* own : OwnExprs(s)) {
        VisitExprs(*own, [&](const Expr& e) {
          typed.exprs_[e.loc.node_id] = &e;
          typed.function_of_[e.loc.node_id] = &f;
        });
      }
    });
  }
  return typed;
}

Type TypeCheckExpression(Expr& expr, const std::vector<ScopeVar>& scope) {
  std::vector<Diagnostic> diagnostics;
  Checker checker(diagnostics);
  checker.SetScope(scope);
  auto t = checker.CheckExpr(expr, std::nullopt);
  if (!diagnostics.empty()) throw TypeErrors(std::move(diagnostics));
  return *t;
}

const Stmt* TypedProgram::FindStmt(int node_id) const {
  auto it = stmts_.find(node_id);
  return it == stmts_.end() ? nullptr : it->second;
}

const Expr* TypedProgram::FindExpr(int node_id) const {
  auto it = exprs_.find(node_id);
  return it == exprs_.end() ? nullptr : it->second;
}

const Function* TypedProgram::FunctionOf(int node_id) const {
  auto it = function_of_.find(node_id);
  return it == function_of_.end() ? nullptr : it->second;
}

const std::vector<ScopeVar>& TypedProgram::ScopeAt(int stmt_id) const {
  return scopes_.at(stmt_id);
}

const std::vector<ObservedValue>& TypedProgram::ObservablesAt(
    int stmt_id) const {
  return observables_.at(stmt_id);
}

std::optional<int> TypedProgram::IfOfCondition(int expr_id) const {
  auto it = if_of_condition_.find(expr_id);
  if (it == if_of_condition_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TypedProgram::ConditionOfIf(int stmt_id) const {
  auto it = condition_of_if_.find(stmt_id);
  if (it == condition_of_if_.end()) return std::nullopt;
  return it->second;
}

bool TypedProgram::IsSkippable(int stmt_id) const {
  const Stmt* s = FindStmt(stmt_id);
  if (!s) return false;
  return s->kind == Stmt::Kind::kAssign || s->kind == Stmt::Kind::kIf ||
         s->kind == Stmt::Kind::kWhile;
}

}  // namespace minipol
