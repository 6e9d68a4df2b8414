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

#ifndef MINIPOL_ANGELIC_H_
#define MINIPOL_ANGELIC_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "minipol/interpreter.h"
#include "minipol/spectrum.h"
#include "minipol/type_checker.h"

namespace minipol {

// A repair site together with a fixed value per failing test that makes
// that test pass. For a condition the value is the forced outcome; for a
// precondition it is always false (the statement is skipped).
struct AngelicPair {
  enum class Kind { kCondition, kPrecondition };

  Kind kind = Kind::kCondition;
  int node_id = -1;       // condition expression or guarded statement
  int statement_id = -1;  // enclosing if statement, or the statement itself
  SourceLoc loc;          // of the statement
  std::vector<std::pair<std::string, bool>> values;  // test name -> value
  double suspiciousness = 0.0;

  Directive DirectiveFor(bool value) const;
};

struct LocalizationOptions {
  RunOptions run;
  // Polled between executions; returning true stops the search early.
  std::function<bool()> should_stop;
};

struct LocalizationResult {
  std::vector<AngelicPair> pairs;  // in candidate order
  int64_t executions = 0;
  int candidates_examined = 0;
  bool stopped = false;
};

// Tries `true` then `false` for each failing test at each candidate
// condition, dropping a candidate at its first test that passes under
// neither. At most 2 * |candidates| * |failing| executions.
LocalizationResult LocateConditionFixes(
    const TypedProgram& program, const std::vector<TestCase>& failing,
    const std::vector<int>& ranked_conditions, const Spectrum& spectrum,
    const LocalizationOptions& options = {});

// Skips each candidate statement in every failing test. At most
// |candidates| * |failing| executions.
LocalizationResult LocatePreconditionFixes(
    const TypedProgram& program, const std::vector<TestCase>& failing,
    const std::vector<int>& ranked_statements, const Spectrum& spectrum,
    const LocalizationOptions& options = {});

}  // namespace minipol

#endif  // MINIPOL_ANGELIC_H_
