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

#include "minipol/synth/synthesizer.h"

#include <stdexcept>

#include "minipol/error.h"
#include "minipol/printer.h"
#include "minipol/synth/decoder.h"
#include "minipol/synth/solver.h"

namespace minipol {

namespace {

bool ReproducesRows(const Expr& expr, const SynthesisInput& input) {
  for (const auto& row : input.rows) {
    auto v = EvaluateOnRow(expr, input.schema, row.inputs);
    if (!v || v->type() != Type::kBool || v->AsBool() != row.expected) {
      return false;
    }
  }
  return true;
}

}  // namespace

SynthesisResult Synthesize(const SynthesisInput& input,
                           const std::vector<ScopeVar>& scope,
                           const SynthesisOptions& options) {
  SynthesisResult result;
  const auto deadline = std::chrono::steady_clock::now() + options.budget;

  bool any_true = false;
  bool any_false = false;
  for (const auto& row : input.rows) (row.expected ? any_true : any_false) = true;
  if (options.trivial_guard && !(any_true && any_false)) {
    result.guard_refused = true;
    result.diagnostic =
        input.rows.empty()
            ? "no test reaches the repair site"
            : std::string("every observation expects ") +
                  (any_true ? "true" : "false") +
                  "; both boolean values must be covered before "
                  "synthesizing an expression";
    return result;
  }
  if (auto contradiction = FindContradiction(input)) {
    result.diagnostic = *contradiction;
    return result;
  }

  const std::vector<Type> numeric = NumericTypesInOrder(InputTypes(input));
  for (int level = 0; level <= options.max_level; ++level) {
    ConstraintSystem system;
    try {
      system = BuildConstraintSystem(
          input, BlocksForLevel(level, numeric), level);
    } catch (const std::invalid_argument& e) {
      result.diagnostic = e.what();
      return result;
    }
    if (options.on_system) options.on_system(system);
    SolveResult solved = Solve(system, {deadline});
    result.solver_nodes += solved.nodes;
    if (solved.status == SolveStatus::kTimeout) {
      result.status = SynthesisResult::Status::kTimeout;
      result.diagnostic = "synthesis budget exhausted at level " +
                          std::to_string(level);
      return result;
    }
    if (solved.status == SolveStatus::kUnsat) continue;
    ExprPtr expr = DecodeModel(system, solved.model);
    try {
      TypeCheckExpression(*expr, scope);
    } catch (const TypeErrors& e) {
      throw std::logic_error("decoded expression does not type-check: " +
                             std::string(e.what()));
    }
    if (!ReproducesRows(*expr, input)) {
      throw std::logic_error("decoded expression " + PrettyPrint(*expr) +
                             " disagrees with the observations");
    }
    result.status = SynthesisResult::Status::kFound;
    result.expression = std::move(expr);
    result.level = level;
    return result;
  }
  result.diagnostic = "no expression up to level " +
                      std::to_string(options.max_level) +
                      " reproduces the observations";
  return result;
}

}  // namespace minipol
