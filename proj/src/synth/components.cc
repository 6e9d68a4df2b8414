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

#include "minipol/synth/components.h"

#include <algorithm>
#include <stdexcept>

namespace minipol {

std::string BlockOpName(BlockOp op) {
  switch (op) {
    case BlockOp::kLt:
      return "lt";
    case BlockOp::kLe:
      return "le";
    case BlockOp::kEq:
      return "eq";
    case BlockOp::kNe:
      return "ne";
    case BlockOp::kAdd:
      return "add";
    case BlockOp::kSub:
      return "sub";
    case BlockOp::kMul:
      return "mul";
    case BlockOp::kAnd:
      return "and";
    case BlockOp::kOr:
      return "or";
    case BlockOp::kNot:
      return "not";
  }
  return "?";
}

bool IsCommutative(BlockOp op) {
  switch (op) {
    case BlockOp::kEq:
    case BlockOp::kNe:
    case BlockOp::kAdd:
    case BlockOp::kMul:
    case BlockOp::kAnd:
    case BlockOp::kOr:
      return true;
    default:
      return false;
  }
}

std::vector<Type> NumericTypesInOrder(const std::vector<Type>& types) {
  std::vector<Type> out;
  for (Type t : types) {
    if (IsNumeric(t) && std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<BuildingBlock> BlocksForLevel(
    int level, const std::vector<Type>& numeric_types) {
  if (level < 0 || level > kMaxLevel) {
    throw std::invalid_argument("synthesis level must be in 0..5");
  }
  std::vector<BuildingBlock> out;
  auto add = [&](BlockOp op, Type operand, Type result) {
    out.push_back({0, op, operand, result});
  };
  if (level >= 1) {
    for (Type t : numeric_types) {
      for (BlockOp op :
           {BlockOp::kLt, BlockOp::kLe, BlockOp::kEq, BlockOp::kNe}) {
        add(op, t, Type::kBool);
      }
    }
  }
  if (level >= 2) {
    for (BlockOp op : {BlockOp::kAnd, BlockOp::kOr, BlockOp::kNot}) {
      add(op, Type::kBool, Type::kBool);
    }
  }
  if (level >= 3) {
    for (Type t : numeric_types) {
      add(BlockOp::kAdd, t, t);
      add(BlockOp::kSub, t, t);
    }
  }
  if (level >= 4) {
    for (Type t : numeric_types) add(BlockOp::kMul, t, t);
  }
  if (level == 5) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i]);
  }
  for (size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i) + 1;
  return out;
}

Scalar Scalar::FromValue(const Value& v) {
  Scalar s;
  switch (v.type()) {
    case Type::kBool:
      s.i = v.AsBool() ? 1 : 0;
      break;
    case Type::kInt:
      s.i = v.AsInt();
      break;
    case Type::kReal:
      s.r = v.AsReal();
      break;
    default:
      throw std::invalid_argument("arrays are not synthesis inputs");
  }
  return s;
}

Value Scalar::ToValue(Type type) const {
  switch (type) {
    case Type::kBool:
      return Value::Bool(i != 0);
    case Type::kInt:
      return Value::Int(i);
    case Type::kReal:
      return Value::Real(r);
    default:
      throw std::invalid_argument("arrays are not synthesis inputs");
  }
}

bool Scalar::Equals(const Scalar& other, Type type) const {
  return type == Type::kReal ? r == other.r : i == other.i;
}

namespace {

template <typename T>
bool Compare(BlockOp op, T a, T b) {
  switch (op) {
    case BlockOp::kLt:
      return a < b;
    case BlockOp::kLe:
      return a <= b;
    case BlockOp::kEq:
      return a == b;
    default:
      return a != b;
  }
}

}  // namespace

std::optional<Scalar> ApplyBlock(const BuildingBlock& block,
                                 const Scalar* args) {
  Scalar out;
  const bool real = block.operand_type == Type::kReal;
  switch (block.op) {
    case BlockOp::kLt:
    case BlockOp::kLe:
    case BlockOp::kEq:
    case BlockOp::kNe:
      out.i = real ? Compare(block.op, args[0].r, args[1].r)
                   : Compare(block.op, args[0].i, args[1].i);
      return out;
    case BlockOp::kAnd:
      out.i = args[0].i && args[1].i;
      return out;
    case BlockOp::kOr:
      out.i = args[0].i || args[1].i;
      return out;
    case BlockOp::kNot:
      out.i = !args[0].i;
      return out;
    case BlockOp::kAdd:
      if (real) {
        out.r = args[0].r + args[1].r;
      } else if (__builtin_add_overflow(args[0].i, args[1].i, &out.i)) {
        return std::nullopt;
      }
      return out;
    case BlockOp::kSub:
      if (real) {
        out.r = args[0].r - args[1].r;
      } else if (__builtin_sub_overflow(args[0].i, args[1].i, &out.i)) {
        return std::nullopt;
      }
      return out;
    case BlockOp::kMul:
      if (real) {
        out.r = args[0].r * args[1].r;
      } else if (__builtin_mul_overflow(args[0].i, args[1].i, &out.i)) {
        return std::nullopt;
      }
      return out;
  }
  return std::nullopt;
}

}  // namespace minipol
