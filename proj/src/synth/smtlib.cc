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

#include "minipol/synth/smtlib.h"

#include <cstdlib>
#include <functional>

namespace minipol {

namespace {

bool IsNumeral(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool IsDecimal(std::string_view s) {
  size_t dot = s.find('.');
  if (dot == std::string_view::npos) return false;
  return IsNumeral(s.substr(0, dot)) && IsNumeral(s.substr(dot + 1));
}

__int128 ParseNumeral(const std::string& s) {
  __int128 v = 0;
  for (char c : s) {
    if (v > (static_cast<__int128>(1) << 120)) {
      throw SmtError("numeral " + s + " is too large");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

SmtSort ParseSort(const SExpr& e) {
  if (e.IsAtom("Bool")) return SmtSort::kBool;
  if (e.IsAtom("Int")) return SmtSort::kInt;
  if (e.IsAtom("Real")) return SmtSort::kReal;
  throw SmtError("unsupported sort " + e.ToString());
}

class SortChecker {
 public:
  explicit SortChecker(const std::map<std::string, SmtSort>& decls)
      : decls_(decls) {}

  SmtSort Check(const SExpr& e) const {
    if (!e.is_list) {
      if (e.atom == "true" || e.atom == "false") return SmtSort::kBool;
      if (IsNumeral(e.atom)) return SmtSort::kInt;
      if (IsDecimal(e.atom)) return SmtSort::kReal;
      auto it = decls_.find(e.atom);
      if (it == decls_.end()) throw SmtError("undeclared symbol " + e.atom);
      return it->second;
    }
    const std::string_view head = e.Head();
    if (head.empty()) throw SmtError("malformed term " + e.ToString());
    std::vector<SmtSort> args;
    for (size_t i = 1; i < e.items.size(); ++i) {
      args.push_back(Check(e.items[i]));
    }
    auto fail = [&]() -> SmtSort {
      throw SmtError("ill-sorted term " + e.ToString());
    };
    auto all = [&](SmtSort s) {
      for (SmtSort a : args) {
        if (a != s) return false;
      }
      return true;
    };
    auto numeric_same = [&]() {
      return !args.empty() && args[0] != SmtSort::kBool && all(args[0]);
    };
    if (head == "not") {
      return args.size() == 1 && all(SmtSort::kBool) ? SmtSort::kBool : fail();
    }
    if (head == "and" || head == "or") {
      return args.size() >= 2 && all(SmtSort::kBool) ? SmtSort::kBool : fail();
    }
    if (head == "=>") {
      return args.size() == 2 && all(SmtSort::kBool) ? SmtSort::kBool : fail();
    }
    if (head == "=") {
      return args.size() == 2 && all(args[0]) ? SmtSort::kBool : fail();
    }
    if (head == "<" || head == "<=" || head == ">" || head == ">=") {
      return args.size() == 2 && numeric_same() ? SmtSort::kBool : fail();
    }
    if (head == "-" && args.size() == 1) {
      return numeric_same() ? args[0] : fail();
    }
    if (head == "+" || head == "-" || head == "*") {
      return args.size() >= 2 && numeric_same() ? args[0] : fail();
    }
    throw SmtError("unsupported function " + std::string(head));
  }

 private:
  const std::map<std::string, SmtSort>& decls_;
};

SmtValue Eval(const SExpr& e, const SmtAssignment& a) {
  if (!e.is_list) {
    if (e.atom == "true") return SmtValue::Bool(true);
    if (e.atom == "false") return SmtValue::Bool(false);
    if (IsNumeral(e.atom)) return SmtValue::Int(ParseNumeral(e.atom));
    if (IsDecimal(e.atom)) return SmtValue::Real(std::strtod(e.atom.c_str(), nullptr));
    auto it = a.find(e.atom);
    if (it == a.end()) throw SmtError("no value for " + e.atom);
    return it->second;
  }
  const std::string_view head = e.Head();
  std::vector<SmtValue> args;
  // Connectives short-circuit like the logic they encode.
  if (head == "and" || head == "or") {
    const bool is_and = head == "and";
    for (size_t i = 1; i < e.items.size(); ++i) {
      if (Eval(e.items[i], a).b != is_and) return SmtValue::Bool(!is_and);
    }
    return SmtValue::Bool(is_and);
  }
  if (head == "=>") {
    if (!Eval(e.items[1], a).b) return SmtValue::Bool(true);
    return Eval(e.items[2], a);
  }
  for (size_t i = 1; i < e.items.size(); ++i) args.push_back(Eval(e.items[i], a));
  if (head == "not") return SmtValue::Bool(!args[0].b);
  const bool real = args[0].sort == SmtSort::kReal;
  auto cmp = [&](auto op) {
    return SmtValue::Bool(real ? op(args[0].r, args[1].r)
                               : op(args[0].i, args[1].i));
  };
  if (head == "=") {
    if (args[0].sort == SmtSort::kBool) {
      return SmtValue::Bool(args[0].b == args[1].b);
    }
    return cmp(std::equal_to<>());
  }
  if (head == "<") return cmp(std::less<>());
  if (head == "<=") return cmp(std::less_equal<>());
  if (head == ">") return cmp(std::greater<>());
  if (head == ">=") return cmp(std::greater_equal<>());
  if (head == "-" && args.size() == 1) {
    return real ? SmtValue::Real(-args[0].r) : SmtValue::Int(-args[0].i);
  }
  SmtValue acc = args[0];
  for (size_t i = 1; i < args.size(); ++i) {
    const SmtValue& x = args[i];
    if (head == "+") {
      acc.r += x.r;
      acc.i += x.i;
    } else if (head == "-") {
      acc.r -= x.r;
      acc.i -= x.i;
    } else if (head == "*") {
      acc.r *= x.r;
      acc.i *= x.i;
    } else {
      throw SmtError("unsupported function " + std::string(head));
    }
  }
  return acc;
}

}  // namespace

SmtScript ParseSmtScript(std::string_view text) {
  std::vector<SExpr> commands;
  try {
    commands = ParseSExprs(text);
  } catch (const SExprError& e) {
    throw SmtError(e.what());
  }
  SmtScript script;
  for (const SExpr& c : commands) {
    const std::string_view head = c.Head();
    const size_t n = c.items.size();
    if (head == "set-option" || head == "exit") continue;
    if (head == "set-logic") {
      if (n != 2 || c.items[1].is_list || !script.logic.empty()) {
        throw SmtError("bad set-logic command");
      }
      script.logic = c.items[1].atom;
    } else if (head == "declare-fun" || head == "declare-const") {
      const bool fun = head == "declare-fun";
      if (n != (fun ? 4u : 3u) || c.items[1].is_list ||
          (fun && (!c.items[2].is_list || !c.items[2].items.empty()))) {
        throw SmtError("unsupported declaration " + c.ToString());
      }
      if (!script.declarations
               .emplace(c.items[1].atom, ParseSort(c.items[n - 1]))
               .second) {
        throw SmtError("duplicate declaration of " + c.items[1].atom);
      }
    } else if (head == "assert") {
      if (n != 2) throw SmtError("assert takes one term");
      if (SortChecker(script.declarations).Check(c.items[1]) !=
          SmtSort::kBool) {
        throw SmtError("assertion is not Bool: " + c.items[1].ToString());
      }
      script.assertions.push_back(c.items[1]);
    } else if (head == "check-sat") {
      ++script.check_sat_count;
    } else if (head == "get-value") {
      if (n != 2 || !c.items[1].is_list) throw SmtError("bad get-value");
      for (const SExpr& v : c.items[1].items) {
        if (v.is_list || !script.declarations.count(v.atom)) {
          throw SmtError("get-value of undeclared " + v.ToString());
        }
        script.get_value.push_back(v.atom);
      }
    } else {
      throw SmtError("unsupported command " + c.ToString());
    }
  }
  if (script.logic.empty()) throw SmtError("missing set-logic");
  return script;
}

bool EvaluateAssertion(const SExpr& term, const SmtAssignment& assignment) {
  return Eval(term, assignment).b;
}

bool Satisfies(const SmtScript& script, const SmtAssignment& assignment) {
  for (const auto& a : script.assertions) {
    if (!EvaluateAssertion(a, assignment)) return false;
  }
  return true;
}

SmtAssignment CompleteAssignment(const ConstraintSystem& cs,
                                 const LocationModel& model) {
  using CS = ConstraintSystem;
  SmtAssignment out;
  for (const auto& [name, loc] : model) out[name] = SmtValue::Int(loc);
  auto to_smt = [](const Scalar& s, Type type) {
    switch (type) {
      case Type::kBool:
        return SmtValue::Bool(s.i != 0);
      case Type::kInt:
        return SmtValue::Int(s.i);
      default:
        return SmtValue::Real(s.r);
    }
  };
  std::map<int64_t, const BuildingBlock*> block_at;
  for (const auto& b : cs.blocks) block_at[model.at(CS::OutputLoc(b))] = &b;
  for (size_t r = 0; r < cs.row_values.size(); ++r) {
    const int row = static_cast<int>(r);
    std::map<int64_t, SmtValue> at;
    for (int i = 0; i < cs.n0; ++i) {
      at[i + 1] = to_smt(cs.row_values[r][i], cs.inputs[i].type);
      out[CS::InputVal(row, i)] = at[i + 1];
    }
    // Blocks in line order, so arguments are always computed first. Block
    // semantics come from the SMT evaluator rather than ApplyBlock.
    for (const auto& [loc, b] : block_at) {
      SmtAssignment args;
      std::vector<SExpr> arg_terms;
      for (int k = 0; k < b->arity(); ++k) {
        const SmtValue& v = at.at(model.at(CS::ArgLoc(*b, k)));
        out[CS::ArgVal(row, *b, k)] = v;
        args["a" + std::to_string(k)] = v;
        arg_terms.push_back(SExpr::Atom("a" + std::to_string(k)));
      }
      static const std::map<BlockOp, const char*> kHead = {
          {BlockOp::kLt, "<"},   {BlockOp::kLe, "<="}, {BlockOp::kEq, "="},
          {BlockOp::kNe, "="},   {BlockOp::kAdd, "+"}, {BlockOp::kSub, "-"},
          {BlockOp::kMul, "*"},  {BlockOp::kAnd, "and"},
          {BlockOp::kOr, "or"},  {BlockOp::kNot, "not"}};
      arg_terms.insert(arg_terms.begin(), SExpr::Atom(kHead.at(b->op)));
      SmtValue v = Eval(SExpr::List(std::move(arg_terms)), args);
      if (b->op == BlockOp::kNe) v.b = !v.b;
      at[loc] = v;
      out[CS::OutputVal(row, *b)] = v;
    }
    out[CS::RootVal(row)] = at.at(model.at(CS::kRootLoc));
  }
  return out;
}

SolverReply ParseSolverReply(std::string_view text) {
  SolverReply reply;
  std::vector<SExpr> items;
  try {
    items = ParseSExprs(text);
  } catch (const SExprError& e) {
    throw SmtError(e.what());
  }
  for (const SExpr& item : items) {
    if (!item.is_list) {
      if (item.atom == "sat" || item.atom == "unsat" || item.atom == "unknown") {
        reply.status = item.atom;
      }
      continue;
    }
    for (const SExpr& pair : item.items) {
      if (!pair.is_list || pair.items.size() != 2 || pair.items[0].is_list) {
        throw SmtError("malformed model entry " + pair.ToString());
      }
      const SExpr& v = pair.items[1];
      int64_t value;
      if (!v.is_list && IsNumeral(v.atom)) {
        value = std::stoll(v.atom);
      } else if (v.is_list && v.items.size() == 2 && v.items[0].IsAtom("-") &&
                 !v.items[1].is_list && IsNumeral(v.items[1].atom)) {
        value = -std::stoll(v.items[1].atom);
      } else {
        throw SmtError("non-integer model value " + pair.ToString());
      }
      reply.model[pair.items[0].atom] = value;
    }
  }
  return reply;
}

}  // namespace minipol
