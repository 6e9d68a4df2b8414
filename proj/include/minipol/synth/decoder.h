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

#ifndef MINIPOL_SYNTH_DECODER_H_
#define MINIPOL_SYNTH_DECODER_H_

#include <optional>
#include <vector>

#include "minipol/ast.h"
#include "minipol/synth/constraint_system.h"
#include "minipol/type_checker.h"

namespace minipol {

// Reads the expression off a well-formed location model by walking back
// from the root line. Lines the root does not reach are dropped; a line
// used twice is copied into both places. The result is untyped. Throws
// std::invalid_argument for a malformed model.
ExprPtr DecodeModel(const ConstraintSystem& system, const LocationModel& model);

// Evaluates an expression over a single row of observed values, where
// variables and len(a) calls are looked up by their schema name. nullopt
// when evaluation fails (unknown name, INT overflow, division by zero).
std::optional<Value> EvaluateOnRow(const Expr& expr,
                                   const std::vector<ObservedValue>& schema,
                                   const std::vector<Value>& row);

}  // namespace minipol

#endif  // MINIPOL_SYNTH_DECODER_H_
