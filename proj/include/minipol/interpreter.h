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

#ifndef MINIPOL_INTERPRETER_H_
#define MINIPOL_INTERPRETER_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minipol/ast.h"
#include "minipol/type_checker.h"
#include "minipol/value.h"

namespace minipol {

struct TestCase {
  std::string name;
  std::string function;
  std::vector<Value> inputs;
  Value expected;
};

// At most one per execution.
struct Directive {
  enum class Kind { kForceCondition, kSkipStatement };

  Kind kind = Kind::kForceCondition;
  int node_id = -1;
  bool value = false;  // forced outcome, kForceCondition only

  static Directive Force(int condition_id, bool value) {
    return Directive{Kind::kForceCondition, condition_id, value};
  }
  static Directive Skip(int statement_id) {
    return Directive{Kind::kSkipStatement, statement_id, false};
  }
};

enum class RuntimeErrorKind {
  kIndexOutOfBounds,
  kIntegerOverflow,
  kDivisionByZero,
  kInvalidConversion,
  kStepBudgetExhausted,
  kMissingReturn,  // a skip directive removed the only return
};

std::string RuntimeErrorName(RuntimeErrorKind kind);

struct NamedValue {
  std::string name;
  Type type;
  Value value;
};

// Observable state at a program point (see TypedProgram::ObservablesAt).
using ScopeSnapshot = std::vector<NamedValue>;

struct ConditionEval {
  int node_id;  // condition expression
  int m;        // 1-based per node
  bool outcome;
  ScopeSnapshot snapshot;
};

// A statement was reached. Recorded before a skip directive takes effect, so
// a skipped statement still has hits but is not covered.
struct StatementHit {
  int node_id;
  int m;
  ScopeSnapshot snapshot;
};

enum class TestStatus { kPass, kFail, kRuntimeError };

struct ExecutionRecord {
  TestStatus status = TestStatus::kPass;
  std::optional<Value> actual;  // set unless status is kRuntimeError
  RuntimeErrorKind error_kind = RuntimeErrorKind::kIndexOutOfBounds;
  SourceLoc error_loc;
  std::set<int> covered_statements;
  // If-conditions only; while conditions are never repair sites.
  std::vector<ConditionEval> condition_evals;
  // Filled only in instrumented runs.
  std::vector<StatementHit> statement_hits;
  int64_t steps = 0;

  bool passed() const { return status == TestStatus::kPass; }
  // "pass", "fail (actual 0)" or "error: index out of bounds at 15:24".
  std::string Describe() const;
};

struct RunOptions {
  // Statements executed plus loop-condition evaluations.
  int64_t step_budget = 1'000'000;
  double real_tolerance = 1e-9;
};

// Checks arity and argument types against the entry function. Throws
// InputError.
void ValidateTestCase(const TypedProgram& program, const TestCase& test);

// Runs one test. With instrument=false, snapshots are left empty and no
// statement hits are recorded. Throws std::invalid_argument when the
// directive does not name an if-condition (force) or a skippable statement
// (skip).
ExecutionRecord RunTest(const TypedProgram& program, const TestCase& test,
                        const std::optional<Directive>& directive = {},
                        bool instrument = false,
                        const RunOptions& options = {});

std::vector<ExecutionRecord> RunSuite(const TypedProgram& program,
                                      const std::vector<TestCase>& suite,
                                      bool instrument = false,
                                      const RunOptions& options = {});

}  // namespace minipol

#endif  // MINIPOL_INTERPRETER_H_
