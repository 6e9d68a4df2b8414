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

#include "minipol/angelic.h"

namespace minipol {

Directive AngelicPair::DirectiveFor(bool value) const {
  return kind == Kind::kCondition ? Directive::Force(node_id, value)
                                  : Directive::Skip(node_id);
}

namespace {

bool ShouldStop(const LocalizationOptions& options) {
  return options.should_stop && options.should_stop();
}

double SuspiciousnessOf(const Spectrum& spectrum, int stmt_id) {
  const StatementSpectrum* s = spectrum.Find(stmt_id);
  return s ? s->suspiciousness : 0.0;
}

}  // namespace

LocalizationResult LocateConditionFixes(
    const TypedProgram& program, const std::vector<TestCase>& failing,
    const std::vector<int>& ranked_conditions, const Spectrum& spectrum,
    const LocalizationOptions& options) {
  LocalizationResult result;
  for (int cond : ranked_conditions) {
    if (ShouldStop(options)) {
      result.stopped = true;
      break;
    }
    ++result.candidates_examined;
    const int if_id = *program.IfOfCondition(cond);
    AngelicPair pair;
    pair.kind = AngelicPair::Kind::kCondition;
    pair.node_id = cond;
    pair.statement_id = if_id;
    pair.loc = program.FindStmt(if_id)->loc;
    pair.suspiciousness = SuspiciousnessOf(spectrum, if_id);
    bool all_fixed = true;
    for (const auto& test : failing) {
      bool fixed = false;
      for (bool value : {true, false}) {
        ++result.executions;
        if (RunTest(program, test, Directive::Force(cond, value), false,
                    options.run)
                .passed()) {
          pair.values.emplace_back(test.name, value);
          fixed = true;
          break;
        }
      }
      if (!fixed) {
        all_fixed = false;
        break;
      }
    }
    if (all_fixed) result.pairs.push_back(std::move(pair));
  }
  return result;
}

LocalizationResult LocatePreconditionFixes(
    const TypedProgram& program, const std::vector<TestCase>& failing,
    const std::vector<int>& ranked_statements, const Spectrum& spectrum,
    const LocalizationOptions& options) {
  LocalizationResult result;
  for (int stmt : ranked_statements) {
    if (ShouldStop(options)) {
      result.stopped = true;
      break;
    }
    ++result.candidates_examined;
    AngelicPair pair;
    pair.kind = AngelicPair::Kind::kPrecondition;
    pair.node_id = stmt;
    pair.statement_id = stmt;
    pair.loc = program.FindStmt(stmt)->loc;
    pair.suspiciousness = SuspiciousnessOf(spectrum, stmt);
    bool all_fixed = true;
    for (const auto& test : failing) {
      ++result.executions;
      if (!RunTest(program, test, Directive::Skip(stmt), false, options.run)
               .passed()) {
        all_fixed = false;
        break;
      }
      pair.values.emplace_back(test.name, false);
    }
    if (all_fixed) result.pairs.push_back(std::move(pair));
  }
  return result;
}

}  // namespace minipol
