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

#ifndef MINIPOL_SYNTH_COMPONENTS_H_
#define MINIPOL_SYNTH_COMPONENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minipol/value.h"

namespace minipol {

enum class BlockOp { kLt, kLe, kEq, kNe, kAdd, kSub, kMul, kAnd, kOr, kNot };

// One instance of an operator in the repertoire. `id` is 1-based and unique
// within a repertoire; the SMT encoding names the block "f<id>".
struct BuildingBlock {
  int id = 0;
  BlockOp op = BlockOp::kLt;
  Type operand_type = Type::kInt;
  Type result_type = Type::kBool;

  int arity() const { return op == BlockOp::kNot ? 1 : 2; }
  std::string Name() const { return "f" + std::to_string(id); }
  // Two blocks of the same class are interchangeable.
  bool SameClass(const BuildingBlock& other) const {
    return op == other.op && operand_type == other.operand_type;
  }
};

std::string BlockOpName(BlockOp op);  // "lt", "add", ...
bool IsCommutative(BlockOp op);

constexpr int kMaxLevel = 5;

// Level 0 is empty. Level 1 has <, <=, ==, != for each numeric type, level
// 2 adds &&, ||, !, level 3 adds + and - per numeric type, level 4 adds *
// per numeric type, and level 5 holds two instances of everything in level
// 4. `numeric_types` lists INT and/or REAL in the order they first occur
// among the synthesis inputs.
std::vector<BuildingBlock> BlocksForLevel(int level,
                                          const std::vector<Type>& numeric_types);

// Numeric types of `types` in order of first occurrence.
std::vector<Type> NumericTypesInOrder(const std::vector<Type>& types);

// A primitive value in the search: INT and BOOL use `i`, REAL uses `r`.
struct Scalar {
  int64_t i = 0;
  double r = 0.0;

  static Scalar FromValue(const Value& v);
  Value ToValue(Type type) const;
  bool Equals(const Scalar& other, Type type) const;
};

// Applies a block; nullopt when INT arithmetic overflows.
std::optional<Scalar> ApplyBlock(const BuildingBlock& block,
                                 const Scalar* args);

}  // namespace minipol

#endif  // MINIPOL_SYNTH_COMPONENTS_H_
