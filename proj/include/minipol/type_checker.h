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

#ifndef MINIPOL_TYPE_CHECKER_H_
#define MINIPOL_TYPE_CHECKER_H_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minipol/ast.h"
#include "minipol/value.h"

namespace minipol {

struct ScopeVar {
  std::string name;
  Type type;
};

// One collected value at a program point: a primitive variable, or the
// length observer `len(a)` of an in-scope array `a`.
struct ObservedValue {
  std::string name;  // "x" or "len(a)"
  Type type;
  std::string variable;
  bool is_length = false;
};

// A program that passed the checker, with every expression typed, plus
// per-node lookup tables. Immutable; copies share the underlying tree.
class TypedProgram {
 public:
  const Program& program() const { return *program_; }

  const Stmt* FindStmt(int node_id) const;
  const Expr* FindExpr(int node_id) const;
  const Function* FunctionOf(int node_id) const;

  // Variables visible just before the statement runs, in declaration order
  // (parameters first).
  const std::vector<ScopeVar>& ScopeAt(int stmt_id) const;
  // Primitive variables of ScopeAt, then one len() observer per array.
  const std::vector<ObservedValue>& ObservablesAt(int stmt_id) const;

  // If-statement owning a condition expression, if `expr_id` is one.
  std::optional<int> IfOfCondition(int expr_id) const;
  // Condition expression id of an if statement.
  std::optional<int> ConditionOfIf(int stmt_id) const;

  // Non-block statements in preorder.
  const std::vector<int>& StatementIds() const { return statement_ids_; }

  // Statements a precondition may guard: assignments, ifs and whiles.
  // Declarations and returns are never skipped.
  bool IsSkippable(int stmt_id) const;

 private:
  friend TypedProgram TypeCheck(Program program);

  std::shared_ptr<const Program> program_;
  std::unordered_map<int, const Stmt*> stmts_;
  std::unordered_map<int, const Expr*> exprs_;
  std::unordered_map<int, const Function*> function_of_;
  std::unordered_map<int, std::vector<ScopeVar>> scopes_;
  std::unordered_map<int, std::vector<ObservedValue>> observables_;
  std::unordered_map<int, int> if_of_condition_;
  std::unordered_map<int, int> condition_of_if_;
  std::vector<int> statement_ids_;
};

// Annotates every expression with its type and verifies that every path
// returns. Throws TypeErrors listing each problem with its location.
TypedProgram TypeCheck(Program program);

// Types a free-standing expression (a synthesized patch or a reference
// expression) against a scope. Throws TypeErrors.
Type TypeCheckExpression(Expr& expr, const std::vector<ScopeVar>& scope);

std::vector<ObservedValue> ObservablesOf(const std::vector<ScopeVar>& scope);

}  // namespace minipol

#endif  // MINIPOL_TYPE_CHECKER_H_
