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

#ifndef MINIPOL_TRACE_H_
#define MINIPOL_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minipol/angelic.h"
#include "minipol/interpreter.h"
#include "minipol/type_checker.h"

namespace minipol {

enum class ConstantStrategy { kDefault, kMined };

struct SynthConstant {
  enum class Origin { kDefault, kMined };

  Value value;
  Origin origin = Origin::kDefault;
};

// One visit of the repair site: the observed values and the boolean the
// synthesized expression must produce there.
struct TraceRow {
  std::string test_name;
  int m = 0;  // visit number within the test, 1-based
  std::vector<Value> inputs;  // parallel to SynthesisInput::schema
  bool expected = false;
};

struct SynthesisInput {
  AngelicPair::Kind target_kind = AngelicPair::Kind::kCondition;
  int node_id = -1;
  int statement_id = -1;
  std::vector<ObservedValue> schema;
  std::vector<TraceRow> rows;
  std::vector<SynthConstant> constants;
  std::vector<std::string> warnings;
  int64_t executions = 0;
};

// Default constants are the integers 0, -1, 1, plus the reals 0.0, -1.0,
// 1.0 when a real value is observable. The mined strategy adds every
// distinct numeric literal of the enclosing function in source order; real
// literals only when a real value is observable.
std::vector<SynthConstant> GatherConstants(
    const TypedProgram& program, int statement_id, ConstantStrategy strategy,
    const std::vector<ObservedValue>& schema);

// Re-runs the suite with instrumentation. Tests named in the pair run under
// its directive and yield rows expecting the angelic value; the remaining
// tests must pass naturally and yield rows expecting what the original
// program did (true for preconditions).
SynthesisInput CollectTrace(const TypedProgram& program,
                            const std::vector<TestCase>& suite,
                            const AngelicPair& pair,
                            ConstantStrategy strategy,
                            const RunOptions& options = {});

// Two rows with equal inputs but different expected values, described for a
// diagnostic, or nullopt.
std::optional<std::string> FindContradiction(const SynthesisInput& input);

}  // namespace minipol

#endif  // MINIPOL_TRACE_H_
