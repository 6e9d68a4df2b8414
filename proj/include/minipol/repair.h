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

#ifndef MINIPOL_REPAIR_H_
#define MINIPOL_REPAIR_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minipol/angelic.h"
#include "minipol/interpreter.h"
#include "minipol/spectrum.h"
#include "minipol/synth/components.h"
#include "minipol/trace.h"
#include "minipol/type_checker.h"

namespace minipol {

enum class RepairMode { kCondition, kPrecondition, kBoth };

enum class SolverKind {
  kInternal,
  // Also writes each constraint system to disk as SMT-LIB before solving
  // it internally.
  kSmtlibExport,
};

struct RepairOptions {
  RepairMode mode = RepairMode::kBoth;
  SolverKind solver = SolverKind::kInternal;
  int max_level = kMaxLevel;
  ConstantStrategy constants = ConstantStrategy::kDefault;
  std::chrono::milliseconds budget{60'000};
  std::chrono::milliseconds synth_budget{10'000};
  bool trivial_guard = true;
  std::string smt_out_dir;  // required with kSmtlibExport
  RunOptions run;
};

enum class NoPatchReason {
  kNone,
  kNoAngelicPair,
  kSynthesisNotFound,
  kValidationRegression,
  kTrivialPatchGuard,
  kTimeout,
};

std::string NoPatchReasonName(NoPatchReason reason);

struct Patch {
  AngelicPair::Kind kind = AngelicPair::Kind::kCondition;
  SourceLoc loc;  // of the repaired statement
  std::string expression;  // rendered, oriented
  int level = -1;
  std::string before;  // source text replaced
  std::string after;   // replacement text
  std::string diff;    // unified diff against the original file
  std::string patched_source;  // empty for programs without source text
  Program patched;
};

// What happened to one angelic pair.
struct PairAttempt {
  AngelicPair pair;
  std::string outcome;  // patched, not_found, guard, regression, timeout
  std::string expression;
  int level = -1;
  std::string diagnostic;
};

struct RepairResult {
  std::optional<Patch> patch;
  NoPatchReason reason = NoPatchReason::kNone;
  int tests_passing = 0;  // before repair
  int tests_failing = 0;
  int pairs_examined = 0;
  std::map<std::string, int> candidates_by_phase;
  std::vector<PairAttempt> attempts;
  std::vector<std::string> diagnostics;
  int64_t test_executions = 0;
  int64_t solver_nodes = 0;
  double elapsed_ms = 0.0;  // wall clock; not part of the JSON report
  std::vector<std::string> smt_files;
  Spectrum spectrum;
  std::vector<SynthesisInput> traces;

  bool patched() const { return patch.has_value(); }
};

// Localizes, finds angelic values, synthesizes and validates, stopping at
// the first patch under which the whole suite passes. Conditions are tried
// before preconditions. Throws InputError when no test fails or none
// passes.
RepairResult Repair(const TypedProgram& program,
                    const std::vector<TestCase>& suite,
                    const RepairOptions& options = {});

// Swaps a comparison's operands (with the mirrored operator) when that reads
// closer to the code it replaces: literals go on the right, and a variable
// that led the original comparison leads again.
ExprPtr OrientLikeOriginal(ExprPtr expr, const Expr* original);

// Replaces a condition or guards a statement, returning the re-checked
// program. Throws TypeErrors if the result does not type-check.
TypedProgram ApplyPatch(const TypedProgram& program, const AngelicPair& pair,
                        const Expr& expression);

}  // namespace minipol

#endif  // MINIPOL_REPAIR_H_
