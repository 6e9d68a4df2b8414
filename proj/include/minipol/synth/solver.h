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

#ifndef MINIPOL_SYNTH_SOLVER_H_
#define MINIPOL_SYNTH_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>

#include "minipol/synth/constraint_system.h"

namespace minipol {

enum class SolveStatus { kSat, kUnsat, kTimeout };

struct SolverOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsat;
  LocationModel model;  // complete and well-formed when kSat
  int64_t nodes = 0;    // candidate lines evaluated
};

// Decides a constraint system by enumerating straight-line programs over
// its blocks, shortest first, and completing the first one that matches
// every row into a full location model. Blocks left unused are parked on
// the lowest free lines. Deterministic: equal systems give equal models.
SolveResult Solve(const ConstraintSystem& system,
                  const SolverOptions& options = {});

}  // namespace minipol

#endif  // MINIPOL_SYNTH_SOLVER_H_
