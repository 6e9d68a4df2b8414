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

#include "minipol/synth/constraint_system.h"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace minipol {

namespace {

using S = SExpr;

S Atom(const std::string& s) { return S::Atom(s); }
S Call(const char* head, std::vector<S> args) {
  args.insert(args.begin(), S::Atom(head));
  return S::List(std::move(args));
}
S Eq(S a, S b) { return Call("=", {std::move(a), std::move(b)}); }
S Num(int64_t v) { return S::Int(v); }

// Disjunction that stays valid SMT-LIB when empty or singular.
S AnyOf(std::vector<S> terms) {
  if (terms.empty()) return Atom("false");
  if (terms.size() == 1) return std::move(terms[0]);
  return Call("or", std::move(terms));
}

std::string SortOf(Type type) {
  switch (type) {
    case Type::kBool:
      return "Bool";
    case Type::kInt:
      return "Int";
    case Type::kReal:
      return "Real";
    default:
      throw std::invalid_argument("arrays are not synthesis inputs");
  }
}

S ScalarTerm(const Scalar& s, Type type) {
  switch (type) {
    case Type::kBool:
      return Atom(s.i ? "true" : "false");
    case Type::kInt:
      return S::Int(s.i);
    default:
      return S::Real(s.r);
  }
}

S BlockTerm(BlockOp op, std::vector<S> args) {
  switch (op) {
    case BlockOp::kLt:
      return Call("<", std::move(args));
    case BlockOp::kLe:
      return Call("<=", std::move(args));
    case BlockOp::kEq:
      return Call("=", std::move(args));
    case BlockOp::kNe:
      return Call("not", {Call("=", std::move(args))});
    case BlockOp::kAdd:
      return Call("+", std::move(args));
    case BlockOp::kSub:
      return Call("-", std::move(args));
    case BlockOp::kMul:
      return Call("*", std::move(args));
    case BlockOp::kAnd:
      return Call("and", std::move(args));
    case BlockOp::kOr:
      return Call("or", std::move(args));
    case BlockOp::kNot:
      return Call("not", std::move(args));
  }
  throw std::logic_error("unknown block operator");
}

// A (location, value) variable pair that takes part in connections.
struct Port {
  std::string loc;
  Type type;
  bool is_input;
  std::function<std::string(int)> value;
};

std::vector<Port> Ports(const ConstraintSystem& cs) {
  using CS = ConstraintSystem;
  std::vector<Port> ports;
  for (int i = 0; i < cs.n0; ++i) {
    ports.push_back({CS::InputLoc(i), cs.inputs[i].type, true,
                     [i](int r) { return CS::InputVal(r, i); }});
  }
  for (const auto& b : cs.blocks) {
    ports.push_back({CS::OutputLoc(b), b.result_type, false,
                     [b](int r) { return CS::OutputVal(r, b); }});
    for (int k = 0; k < b.arity(); ++k) {
      ports.push_back({CS::ArgLoc(b, k), b.operand_type, false,
                       [b, k](int r) { return CS::ArgVal(r, b, k); }});
    }
  }
  ports.push_back({CS::kRootLoc, Type::kBool, false,
                   [](int r) { return CS::RootVal(r); }});
  return ports;
}

}  // namespace

std::string ConstraintSystem::InputLoc(int input) {
  return "l_in_" + std::to_string(input + 1);
}
std::string ConstraintSystem::OutputLoc(const BuildingBlock& block) {
  return "l_out_" + block.Name();
}
std::string ConstraintSystem::ArgLoc(const BuildingBlock& block, int arg) {
  return "l_arg_" + block.Name() + "_" + std::to_string(arg + 1);
}
std::string ConstraintSystem::InputVal(int row, int input) {
  return "v" + std::to_string(row + 1) + "_in_" + std::to_string(input + 1);
}
std::string ConstraintSystem::OutputVal(int row, const BuildingBlock& block) {
  return "v" + std::to_string(row + 1) + "_out_" + block.Name();
}
std::string ConstraintSystem::ArgVal(int row, const BuildingBlock& block,
                                     int arg) {
  return "v" + std::to_string(row + 1) + "_arg_" + block.Name() + "_" +
         std::to_string(arg + 1);
}
std::string ConstraintSystem::RootVal(int row) {
  return "v" + std::to_string(row + 1) + "_r";
}

std::vector<std::string> ConstraintSystem::LocationVariables() const {
  std::vector<std::string> out;
  for (int i = 0; i < n0; ++i) out.push_back(InputLoc(i));
  for (const auto& b : blocks) {
    out.push_back(OutputLoc(b));
    for (int k = 0; k < b.arity(); ++k) out.push_back(ArgLoc(b, k));
  }
  out.push_back(kRootLoc);
  return out;
}

std::vector<std::pair<std::string, std::string>>
ConstraintSystem::Declarations() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& name : LocationVariables()) out.emplace_back(name, "Int");
  const auto ports = Ports(*this);
  for (int r = 0; r < static_cast<int>(row_values.size()); ++r) {
    for (const auto& p : ports) out.emplace_back(p.value(r), SortOf(p.type));
  }
  return out;
}

std::string ConstraintSystem::Logic() const {
  bool real = false;
  bool nonlinear = false;
  for (const auto& in : inputs) real |= in.type == Type::kReal;
  for (const auto& b : blocks) {
    real |= b.operand_type == Type::kReal;
    nonlinear |= b.op == BlockOp::kMul;
  }
  return std::string("QF_") + (nonlinear ? "N" : "L") + (real ? "IRA" : "IA");
}

std::vector<ConstraintGroup> ConstraintSystem::Groups() const {
  ConstraintGroup wf{"well_formed",
                     "inputs occupy the first lines, every block has its own "
                     "line, arguments are defined earlier and are type-correct",
                     {}};
  for (int i = 0; i < n0; ++i) {
    wf.assertions.push_back(Eq(Atom(InputLoc(i)), Num(i + 1)));
  }
  for (const auto& b : blocks) {
    wf.assertions.push_back(Call(
        "and", {Call("<=", {Num(n0 + 1), Atom(OutputLoc(b))}),
                Call("<=", {Atom(OutputLoc(b)), Num(m)})}));
  }
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      wf.assertions.push_back(Call(
          "not", {Eq(Atom(OutputLoc(blocks[i])), Atom(OutputLoc(blocks[j])))}));
    }
  }
  auto sources = [&](Type type) {
    std::vector<std::string> out;
    for (int i = 0; i < n0; ++i) {
      if (inputs[i].type == type) out.push_back(InputLoc(i));
    }
    for (const auto& b : blocks) {
      if (b.result_type == type) out.push_back(OutputLoc(b));
    }
    return out;
  };
  for (const auto& b : blocks) {
    for (int k = 0; k < b.arity(); ++k) {
      const S arg = Atom(ArgLoc(b, k));
      wf.assertions.push_back(Call("<=", {Num(1), arg}));
      wf.assertions.push_back(Call("<", {arg, Atom(OutputLoc(b))}));
      std::vector<S> options;
      for (const auto& src : sources(b.operand_type)) {
        options.push_back(Eq(arg, Atom(src)));
      }
      wf.assertions.push_back(AnyOf(std::move(options)));
    }
  }
  std::vector<S> root_options;
  if (blocks.empty()) {
    for (int i = 0; i < n0; ++i) {
      if (inputs[i].type == Type::kBool) {
        root_options.push_back(Eq(Atom(kRootLoc), Atom(InputLoc(i))));
      }
    }
  } else {
    wf.assertions.push_back(Eq(Atom(kRootLoc), Num(m)));
    for (const auto& b : blocks) {
      if (b.result_type == Type::kBool) {
        root_options.push_back(Eq(Atom(kRootLoc), Atom(OutputLoc(b))));
      }
    }
  }
  wf.assertions.push_back(AnyOf(std::move(root_options)));

  ConstraintGroup lib{"library", "each block computes its operator", {}};
  ConstraintGroup conn{"connection",
                       "values agree wherever two locations coincide", {}};
  ConstraintGroup io{"io", "each row's inputs yield its expected outcome", {}};
  const auto ports = Ports(*this);
  for (int r = 0; r < static_cast<int>(row_values.size()); ++r) {
    for (const auto& b : blocks) {
      std::vector<S> args;
      for (int k = 0; k < b.arity(); ++k) args.push_back(Atom(ArgVal(r, b, k)));
      lib.assertions.push_back(
          Eq(Atom(OutputVal(r, b)), BlockTerm(b.op, std::move(args))));
    }
    for (size_t i = 0; i < ports.size(); ++i) {
      for (size_t j = i + 1; j < ports.size(); ++j) {
        const Port& a = ports[i];
        const Port& c = ports[j];
        if (a.type != c.type || (a.is_input && c.is_input)) continue;
        conn.assertions.push_back(
            Call("=>", {Eq(Atom(a.loc), Atom(c.loc)),
                        Eq(Atom(a.value(r)), Atom(c.value(r)))}));
      }
    }
    for (int i = 0; i < n0; ++i) {
      io.assertions.push_back(Eq(Atom(InputVal(r, i)),
                                 ScalarTerm(row_values[r][i], inputs[i].type)));
    }
    io.assertions.push_back(
        Eq(Atom(RootVal(r)), Atom(expected[r] ? "true" : "false")));
  }
  return {std::move(wf), std::move(lib), std::move(conn), std::move(io)};
}

std::string ConstraintSystem::ToSmtLib() const {
  std::ostringstream out;
  out << "; repair condition synthesis, level " << level << ", "
      << inputs.size() << " inputs, " << blocks.size() << " blocks, "
      << row_values.size() << " rows\n";
  for (int i = 0; i < n0; ++i) {
    out << "; line " << i + 1 << ": " << inputs[i].name << " : "
        << TypeName(inputs[i].type) << "\n";
  }
  for (const auto& b : blocks) {
    out << "; " << b.Name() << " = " << BlockOpName(b.op) << " over "
        << TypeName(b.operand_type) << "\n";
  }
  out << "(set-option :produce-models true)\n";
  out << "(set-logic " << Logic() << ")\n";
  for (const auto& [name, sort] : Declarations()) {
    out << "(declare-fun " << name << " () " << sort << ")\n";
  }
  for (const auto& group : Groups()) {
    out << "; " << group.name << ": " << group.description << "\n";
    for (const auto& a : group.assertions) {
      out << "(assert " << a.ToString() << ")\n";
    }
  }
  out << "(check-sat)\n(get-value (";
  const auto locs = LocationVariables();
  for (size_t i = 0; i < locs.size(); ++i) {
    out << (i ? " " : "") << locs[i];
  }
  out << "))\n(exit)\n";
  return out.str();
}

bool ConstraintSystem::IsWellFormed(const LocationModel& model,
                                    std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  for (const auto& name : LocationVariables()) {
    if (!model.count(name)) return fail("missing " + name);
  }
  for (int i = 0; i < n0; ++i) {
    if (model.at(InputLoc(i)) != i + 1) return fail(InputLoc(i) + " misplaced");
  }
  // Type of whatever sits at each location.
  std::map<int64_t, Type> type_at;
  for (int i = 0; i < n0; ++i) type_at[i + 1] = inputs[i].type;
  for (const auto& b : blocks) {
    int64_t out = model.at(OutputLoc(b));
    if (out <= n0 || out > m) return fail(OutputLoc(b) + " out of range");
    if (!type_at.emplace(out, b.result_type).second) {
      return fail(OutputLoc(b) + " shares its line");
    }
  }
  for (const auto& b : blocks) {
    for (int k = 0; k < b.arity(); ++k) {
      int64_t arg = model.at(ArgLoc(b, k));
      if (arg < 1 || arg >= model.at(OutputLoc(b))) {
        return fail(ArgLoc(b, k) + " is not defined before its block");
      }
      auto it = type_at.find(arg);
      if (it == type_at.end() || it->second != b.operand_type) {
        return fail(ArgLoc(b, k) + " has the wrong type");
      }
    }
  }
  int64_t root = model.at(kRootLoc);
  if (!blocks.empty() && root != m) return fail("l_r is not the last line");
  auto it = type_at.find(root);
  if (it == type_at.end() || it->second != Type::kBool) {
    return fail("l_r is not a boolean line");
  }
  return true;
}

std::optional<std::vector<bool>> ConstraintSystem::Evaluate(
    const LocationModel& model) const {
  if (!IsWellFormed(model)) return std::nullopt;
  std::map<int64_t, const BuildingBlock*> block_at;
  for (const auto& b : blocks) block_at[model.at(OutputLoc(b))] = &b;
  std::vector<bool> out;
  for (const auto& row : row_values) {
    std::function<std::optional<Scalar>(int64_t)> value =
        [&](int64_t loc) -> std::optional<Scalar> {
      if (loc <= n0) return row[loc - 1];
      const BuildingBlock& b = *block_at.at(loc);
      Scalar args[2];
      for (int k = 0; k < b.arity(); ++k) {
        auto v = value(model.at(ArgLoc(b, k)));
        if (!v) return std::nullopt;
        args[k] = *v;
      }
      return ApplyBlock(b, args);
    };
    auto root = value(model.at(kRootLoc));
    if (!root) return std::nullopt;
    out.push_back(root->i != 0);
  }
  return out;
}

std::vector<Type> InputTypes(const SynthesisInput& input) {
  std::vector<Type> out;
  for (const auto& o : input.schema) out.push_back(o.type);
  for (const auto& c : input.constants) out.push_back(c.value.type());
  return out;
}

ConstraintSystem BuildConstraintSystem(const SynthesisInput& input,
                                       std::vector<BuildingBlock> blocks,
                                       int level) {
  ConstraintSystem cs;
  cs.level = level;
  for (const auto& o : input.schema) {
    InputSlot slot;
    slot.source = InputSlot::Source::kObserved;
    slot.name = o.name;
    slot.type = o.type;
    slot.variable = o.variable;
    slot.is_length = o.is_length;
    cs.inputs.push_back(std::move(slot));
  }
  for (const auto& c : input.constants) {
    InputSlot slot;
    slot.source = InputSlot::Source::kConstant;
    slot.name = ToLiteral(c.value);
    slot.type = c.value.type();
    slot.constant = c.value;
    cs.inputs.push_back(std::move(slot));
  }
  cs.blocks = std::move(blocks);
  cs.n0 = static_cast<int>(cs.inputs.size());
  cs.m = cs.n0 + static_cast<int>(cs.blocks.size());
  for (const auto& row : input.rows) {
    std::vector<Scalar> values;
    for (size_t i = 0; i < row.inputs.size(); ++i) {
      const Value& v = row.inputs[i];
      if (v.type() == Type::kReal && !std::isfinite(v.AsReal())) {
        throw std::invalid_argument("observed value of " + cs.inputs[i].name +
                                    " in test '" + row.test_name +
                                    "' is not a finite number");
      }
      values.push_back(Scalar::FromValue(v));
    }
    for (const auto& c : input.constants) {
      values.push_back(Scalar::FromValue(c.value));
    }
    cs.row_values.push_back(std::move(values));
    cs.expected.push_back(row.expected);
  }
  return cs;
}

}  // namespace minipol
