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

#include "minipol/trace.h"

#include <map>

namespace minipol {

namespace {

bool HasType(const std::vector<ObservedValue>& schema, Type type) {
  for (const auto& o : schema) {
    if (o.type == type) return true;
  }
  return false;
}

void AddConstant(std::vector<SynthConstant>& out, Value value,
                 SynthConstant::Origin origin) {
  for (const auto& c : out) {
    if (c.value == value) return;
  }
  out.push_back({std::move(value), origin});
}

void MineLiteral(const Value& literal, bool reals,
                 std::vector<SynthConstant>& out) {
  constexpr auto kMined = SynthConstant::Origin::kMined;
  switch (literal.type()) {
    case Type::kInt:
      AddConstant(out, literal, kMined);
      break;
    case Type::kReal:
      if (reals) AddConstant(out, literal, kMined);
      break;
    case Type::kIntArray:
      for (int64_t v : literal.AsIntArray()) {
        AddConstant(out, Value::Int(v), kMined);
      }
      break;
    case Type::kRealArray:
      if (!reals) break;
      for (double v : literal.AsRealArray()) {
        AddConstant(out, Value::Real(v), kMined);
      }
      break;
    case Type::kBool:
      break;
  }
}

std::vector<Value> RowValues(const ScopeSnapshot& snapshot) {
  std::vector<Value> out;
  out.reserve(snapshot.size());
  for (const auto& nv : snapshot) out.push_back(nv.value);
  return out;
}

}  // namespace

std::vector<SynthConstant> GatherConstants(
    const TypedProgram& program, int statement_id, ConstantStrategy strategy,
    const std::vector<ObservedValue>& schema) {
  constexpr auto kDefault = SynthConstant::Origin::kDefault;
  const bool reals = HasType(schema, Type::kReal);
  std::vector<SynthConstant> out;
  for (int64_t v : {0, -1, 1}) AddConstant(out, Value::Int(v), kDefault);
  if (reals) {
    for (double v : {0.0, -1.0, 1.0}) AddConstant(out, Value::Real(v), kDefault);
  }
  if (strategy == ConstantStrategy::kMined) {
    const Function* f = program.FunctionOf(statement_id);
    VisitStmts(*f->body, [&](const Stmt& s) {
      for (const Expr* e : OwnExprs(s)) {
        VisitExprs(*e, [&](const Expr& sub) {
          if (sub.kind == Expr::Kind::kLiteral) {
            MineLiteral(sub.literal, reals, out);
          }
        });
      }
    });
  }
  return out;
}

SynthesisInput CollectTrace(const TypedProgram& program,
                            const std::vector<TestCase>& suite,
                            const AngelicPair& pair,
                            ConstantStrategy strategy,
                            const RunOptions& options) {
  SynthesisInput input;
  input.target_kind = pair.kind;
  input.node_id = pair.node_id;
  input.statement_id = pair.statement_id;
  input.schema = program.ObservablesAt(pair.statement_id);
  input.constants =
      GatherConstants(program, pair.statement_id, strategy, input.schema);

  std::map<std::string, bool> angelic(pair.values.begin(), pair.values.end());
  const bool condition = pair.kind == AngelicPair::Kind::kCondition;
  int passing_rows = 0;
  for (const auto& test : suite) {
    auto it = angelic.find(test.name);
    std::optional<Directive> directive;
    if (it != angelic.end()) directive = pair.DirectiveFor(it->second);
    ++input.executions;
    ExecutionRecord record =
        RunTest(program, test, directive, /*instrument=*/true, options);
    if (!record.passed()) {
      input.warnings.push_back("test '" + test.name +
                               "' is neither passing nor fixed by the "
                               "angelic value; ignored");
      continue;
    }
    const size_t before = input.rows.size();
    if (condition) {
      for (const auto& eval : record.condition_evals) {
        if (eval.node_id != pair.node_id) continue;
        input.rows.push_back(
            {test.name, eval.m, RowValues(eval.snapshot), eval.outcome});
      }
    } else {
      for (const auto& hit : record.statement_hits) {
        if (hit.node_id != pair.node_id) continue;
        input.rows.push_back(
            {test.name, hit.m, RowValues(hit.snapshot), !directive});
      }
    }
    if (!directive) passing_rows += input.rows.size() - before;
  }
  if (passing_rows == 0) {
    input.warnings.push_back(
        "no passing test reaches line " + std::to_string(pair.loc.line) +
        "; the expression is constrained by failing tests only");
  }
  return input;
}

std::optional<std::string> FindContradiction(const SynthesisInput& input) {
  for (size_t i = 0; i < input.rows.size(); ++i) {
    for (size_t j = i + 1; j < input.rows.size(); ++j) {
      const TraceRow& a = input.rows[i];
      const TraceRow& b = input.rows[j];
      if (a.expected != b.expected && a.inputs == b.inputs) {
        return "visit " + std::to_string(a.m) + " of test '" + a.test_name +
               "' and visit " + std::to_string(b.m) + " of test '" +
               b.test_name +
               "' observe the same values but need different outcomes";
      }
    }
  }
  return std::nullopt;
}

}  // namespace minipol
