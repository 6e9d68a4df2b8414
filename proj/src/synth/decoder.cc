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

#include "minipol/synth/decoder.h"

#include <functional>
#include <stdexcept>

namespace minipol {

namespace {

ExprPtr InputExpr(const InputSlot& slot) {
  if (slot.source == InputSlot::Source::kConstant) {
    return MakeLiteral(slot.constant);
  }
  if (slot.is_length) {
    std::vector<ExprPtr> args;
    args.push_back(MakeVar(slot.variable));
    return MakeCall("len", std::move(args));
  }
  return MakeVar(slot.variable);
}

BinaryOp ToBinary(BlockOp op) {
  switch (op) {
    case BlockOp::kLt:
      return BinaryOp::kLt;
    case BlockOp::kLe:
      return BinaryOp::kLe;
    case BlockOp::kEq:
      return BinaryOp::kEq;
    case BlockOp::kNe:
      return BinaryOp::kNe;
    case BlockOp::kAdd:
      return BinaryOp::kAdd;
    case BlockOp::kSub:
      return BinaryOp::kSub;
    case BlockOp::kMul:
      return BinaryOp::kMul;
    case BlockOp::kAnd:
      return BinaryOp::kAnd;
    case BlockOp::kOr:
      return BinaryOp::kOr;
    case BlockOp::kNot:
      break;
  }
  throw std::logic_error("operator has no binary form");
}

std::optional<Value> Lookup(const std::string& name,
                            const std::vector<ObservedValue>& schema,
                            const std::vector<Value>& row) {
  for (size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return row[i];
  }
  return std::nullopt;
}

}  // namespace

ExprPtr DecodeModel(const ConstraintSystem& cs, const LocationModel& model) {
  std::string why;
  if (!cs.IsWellFormed(model, &why)) {
    throw std::invalid_argument("malformed location model: " + why);
  }
  std::map<int64_t, const BuildingBlock*> block_at;
  for (const auto& b : cs.blocks) {
    block_at[model.at(ConstraintSystem::OutputLoc(b))] = &b;
  }
  std::function<ExprPtr(int64_t)> build = [&](int64_t loc) -> ExprPtr {
    if (loc <= cs.n0) return InputExpr(cs.inputs[loc - 1]);
    const BuildingBlock& b = *block_at.at(loc);
    if (b.op == BlockOp::kNot) {
      return MakeUnary(UnaryOp::kNot,
                       build(model.at(ConstraintSystem::ArgLoc(b, 0))));
    }
    return MakeBinary(ToBinary(b.op),
                      build(model.at(ConstraintSystem::ArgLoc(b, 0))),
                      build(model.at(ConstraintSystem::ArgLoc(b, 1))));
  };
  return build(model.at(ConstraintSystem::kRootLoc));
}

std::optional<Value> EvaluateOnRow(const Expr& e,
                                   const std::vector<ObservedValue>& schema,
                                   const std::vector<Value>& row) {
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      return e.literal;
    case Expr::Kind::kVar:
      return Lookup(e.name, schema, row);
    case Expr::Kind::kCall:
      if (e.name != "len" || e.args.size() != 1 ||
          e.args[0]->kind != Expr::Kind::kVar) {
        return std::nullopt;
      }
      return Lookup("len(" + e.args[0]->name + ")", schema, row);
    case Expr::Kind::kIndex:
      return std::nullopt;
    case Expr::Kind::kUnary: {
      auto v = EvaluateOnRow(*e.args[0], schema, row);
      if (!v) return std::nullopt;
      if (e.unary_op == UnaryOp::kNot) return Value::Bool(!v->AsBool());
      if (v->type() == Type::kReal) return Value::Real(-v->AsReal());
      if (v->AsInt() == INT64_MIN) return std::nullopt;
      return Value::Int(-v->AsInt());
    }
    case Expr::Kind::kBinary:
      break;
  }
  const BinaryOp op = e.binary_op;
  auto l = EvaluateOnRow(*e.args[0], schema, row);
  if (!l) return std::nullopt;
  if (op == BinaryOp::kAnd && !l->AsBool()) return Value::Bool(false);
  if (op == BinaryOp::kOr && l->AsBool()) return Value::Bool(true);
  auto r = EvaluateOnRow(*e.args[1], schema, row);
  if (!r) return std::nullopt;
  if (op == BinaryOp::kAnd || op == BinaryOp::kOr) return Value::Bool(r->AsBool());
  if (l->type() != r->type()) return std::nullopt;
  if (l->type() == Type::kReal) {
    const double a = l->AsReal();
    const double b = r->AsReal();
    switch (op) {
      case BinaryOp::kLt: return Value::Bool(a < b);
      case BinaryOp::kLe: return Value::Bool(a <= b);
      case BinaryOp::kGt: return Value::Bool(a > b);
      case BinaryOp::kGe: return Value::Bool(a >= b);
      case BinaryOp::kEq: return Value::Bool(a == b);
      case BinaryOp::kNe: return Value::Bool(a != b);
      case BinaryOp::kAdd: return Value::Real(a + b);
      case BinaryOp::kSub: return Value::Real(a - b);
      case BinaryOp::kMul: return Value::Real(a * b);
      case BinaryOp::kDiv: return Value::Real(a / b);
      default: return std::nullopt;
    }
  }
  if (l->type() == Type::kBool) {
    if (op == BinaryOp::kEq) return Value::Bool(l->AsBool() == r->AsBool());
    if (op == BinaryOp::kNe) return Value::Bool(l->AsBool() != r->AsBool());
    return std::nullopt;
  }
  const int64_t a = l->AsInt();
  const int64_t b = r->AsInt();
  int64_t out;
  switch (op) {
    case BinaryOp::kLt: return Value::Bool(a < b);
    case BinaryOp::kLe: return Value::Bool(a <= b);
    case BinaryOp::kGt: return Value::Bool(a > b);
    case BinaryOp::kGe: return Value::Bool(a >= b);
    case BinaryOp::kEq: return Value::Bool(a == b);
    case BinaryOp::kNe: return Value::Bool(a != b);
    case BinaryOp::kAdd:
      if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
      return Value::Int(out);
    case BinaryOp::kSub:
      if (__builtin_sub_overflow(a, b, &out)) return std::nullopt;
      return Value::Int(out);
    case BinaryOp::kMul:
      if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
      return Value::Int(out);
    case BinaryOp::kDiv:
      if (b == 0 || (a == INT64_MIN && b == -1)) return std::nullopt;
      return Value::Int(a / b);
    default:
      return std::nullopt;
  }
}

}  // namespace minipol
