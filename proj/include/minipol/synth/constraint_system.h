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

#ifndef MINIPOL_SYNTH_CONSTRAINT_SYSTEM_H_
#define MINIPOL_SYNTH_CONSTRAINT_SYSTEM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minipol/synth/components.h"
#include "minipol/synth/sexpr.h"
#include "minipol/trace.h"

namespace minipol {

// An element of I_0, the synthesis inputs: an observed value or a constant.
struct InputSlot {
  enum class Source { kObserved, kConstant };

  Source source = Source::kObserved;
  std::string name;  // "x", "len(a)" or the constant's literal
  Type type = Type::kInt;
  std::string variable;     // observed only
  bool is_length = false;   // observed only
  Value constant;           // constant only
};

// Location variable name -> line number. Locations 1..n0 hold the inputs,
// n0+1..m the block outputs.
using LocationModel = std::map<std::string, int64_t>;

struct ConstraintGroup {
  std::string name;
  std::string description;
  std::vector<SExpr> assertions;
};

// The location-based encoding of "some wiring of these blocks maps every
// row's inputs to its expected boolean". Location constraints are shared by
// all rows; value variables are instantiated per row.
struct ConstraintSystem {
  int level = 0;
  std::vector<InputSlot> inputs;
  std::vector<BuildingBlock> blocks;
  int n0 = 0;
  int m = 0;
  std::vector<std::vector<Scalar>> row_values;  // [row][input]
  std::vector<bool> expected;

  static std::string InputLoc(int input);  // 0-based input index
  static std::string OutputLoc(const BuildingBlock& block);
  static std::string ArgLoc(const BuildingBlock& block, int arg);  // 0-based
  static constexpr const char* kRootLoc = "l_r";
  static std::string InputVal(int row, int input);
  static std::string OutputVal(int row, const BuildingBlock& block);
  static std::string ArgVal(int row, const BuildingBlock& block, int arg);
  static std::string RootVal(int row);

  std::vector<std::string> LocationVariables() const;
  // Name -> SMT sort ("Int", "Real" or "Bool") for every variable.
  std::vector<std::pair<std::string, std::string>> Declarations() const;
  // QF_LIA, QF_NIA, QF_LIRA or QF_NIRA.
  std::string Logic() const;
  // Well-formedness, block semantics, connections and input/output
  // agreement, in that order.
  std::vector<ConstraintGroup> Groups() const;
  std::string ToSmtLib() const;

  // Checks the well-formedness constraints on a complete location model.
  bool IsWellFormed(const LocationModel& model, std::string* why = nullptr) const;
  // Output of the wired program on each row, following only what the root
  // reaches. nullopt if the model is malformed or INT arithmetic overflows.
  std::optional<std::vector<bool>> Evaluate(const LocationModel& model) const;
};

// Builds I_0 (schema entries, then constants) and the per-row values.
// Throws std::invalid_argument if a row holds a NaN or infinite real.
ConstraintSystem BuildConstraintSystem(const SynthesisInput& input,
                                       std::vector<BuildingBlock> blocks,
                                       int level);

// Types of I_0, in order; used to pick the block repertoire.
std::vector<Type> InputTypes(const SynthesisInput& input);

}  // namespace minipol

#endif  // MINIPOL_SYNTH_CONSTRAINT_SYSTEM_H_
