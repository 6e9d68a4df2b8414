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

#ifndef MINIPOL_SYNTH_SYNTHESIZER_H_
#define MINIPOL_SYNTH_SYNTHESIZER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minipol/ast.h"
#include "minipol/synth/constraint_system.h"
#include "minipol/trace.h"
#include "minipol/type_checker.h"

namespace minipol {

struct SynthesisOptions {
  int max_level = kMaxLevel;
  std::chrono::milliseconds budget{10'000};
  // Refuse rows that all expect the same outcome: a constant would fit
  // them and tell us nothing.
  bool trivial_guard = true;
  // Called with each system before it is solved.
  std::function<void(const ConstraintSystem&)> on_system;
};

struct SynthesisResult {
  enum class Status { kFound, kNotFound, kTimeout };

  Status status = Status::kNotFound;
  ExprPtr expression;  // typed; set when kFound
  int level = -1;
  bool guard_refused = false;
  std::string diagnostic;
  int64_t solver_nodes = 0;
};

// Tries levels 0..max_level in turn and returns the first expression that
// reproduces every row, checked by re-evaluating it on each row.
SynthesisResult Synthesize(const SynthesisInput& input,
                           const std::vector<ScopeVar>& scope,
                           const SynthesisOptions& options = {});

}  // namespace minipol

#endif  // MINIPOL_SYNTH_SYNTHESIZER_H_
