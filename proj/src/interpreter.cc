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

#include "minipol/interpreter.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "minipol/error.h"

namespace minipol {

std::string RuntimeErrorName(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::kIndexOutOfBounds:
      return "index out of bounds";
    case RuntimeErrorKind::kIntegerOverflow:
      return "integer overflow";
    case RuntimeErrorKind::kDivisionByZero:
      return "division by zero";
    case RuntimeErrorKind::kInvalidConversion:
      return "invalid conversion";
    case RuntimeErrorKind::kStepBudgetExhausted:
      return "step budget exhausted";
    case RuntimeErrorKind::kMissingReturn:
      return "missing return";
  }
  return "?";
}

std::string ExecutionRecord::Describe() const {
  switch (status) {
    case TestStatus::kPass:
      return "pass";
    case TestStatus::kFail:
      return "fail (actual " + ToLiteral(*actual) + ")";
    case TestStatus::kRuntimeError:
      return "error: " + RuntimeErrorName(error_kind) + " at line " +
             std::to_string(error_loc.line);
  }
  return "?";
}

void ValidateTestCase(const TypedProgram& program, const TestCase& test) {
  const Function* f = program.program().FindFunction(test.function);
  if (!f) {
    throw InputError("test '" + test.name + "': no function named '" +
                     test.function + "'");
  }
  if (f->params.size() != test.inputs.size()) {
    throw InputError("test '" + test.name + "': " + f->name + " takes " +
                     std::to_string(f->params.size()) + " arguments, got " +
                     std::to_string(test.inputs.size()));
  }
  for (size_t i = 0; i < f->params.size(); ++i) {
    if (test.inputs[i].type() != f->params[i].type) {
      throw InputError("test '" + test.name + "': argument '" +
                       f->params[i].name + "' expects " +
                       TypeName(f->params[i].type) + ", got " +
                       TypeName(test.inputs[i].type()));
    }
  }
  if (test.expected.type() != f->return_type) {
    throw InputError("test '" + test.name + "': expected value has type " +
                     TypeName(test.expected.type()) + ", function returns " +
                     TypeName(f->return_type));
  }
}

namespace {

struct Fault {
  RuntimeErrorKind kind;
  SourceLoc loc;
};

class Executor {
 public:
  Executor(const TypedProgram& program, const std::optional<Directive>& d,
           bool instrument, const RunOptions& options,
           ExecutionRecord& record)
      : program_(program),
        directive_(d),
        instrument_(instrument),
        options_(options),
        record_(record) {}

  Value Call(const Function& f, const std::vector<Value>& inputs) {
    for (size_t i = 0; i < f.params.size(); ++i) {
      env_[f.params[i].name] = inputs[i];
    }
    // The checker guarantees a return on every path, so only a skipped
    // statement can get us here.
    if (!ExecBlock(*f.body)) throw Fault{RuntimeErrorKind::kMissingReturn, f.loc};
    return std::move(*result_);
  }

 private:
  void Step(const SourceLoc& loc) {
    if (++record_.steps > options_.step_budget) {
      throw Fault{RuntimeErrorKind::kStepBudgetExhausted, loc};
    }
  }

  ScopeSnapshot Snapshot(int stmt_id) const {
    ScopeSnapshot out;
    if (!instrument_) return out;
    for (const auto& o : program_.ObservablesAt(stmt_id)) {
      const Value& v = env_.at(o.variable);
      out.push_back({o.name, o.type,
                     o.is_length ? Value::Int(v.ArrayLength()) : v});
    }
    return out;
  }

  bool ExecBlock(const Stmt& block) {
    for (const auto& s : block.statements) {
      if (Exec(*s)) return true;
    }
    return false;
  }

  // Returns true once a return statement ran.
  bool Exec(const Stmt& s) {
    const int id = s.loc.node_id;
    Step(s.loc);
    if (instrument_) {
      record_.statement_hits.push_back({id, ++hits_[id], Snapshot(id)});
    }
    if (directive_ && directive_->kind == Directive::Kind::kSkipStatement &&
        directive_->node_id == id) {
      return false;
    }
    record_.covered_statements.insert(id);
    switch (s.kind) {
      case Stmt::Kind::kDecl:
        env_[s.name] = Eval(*s.expr);
        return false;
      case Stmt::Kind::kAssign:
        Assign(*s.target, Eval(*s.expr));
        return false;
      case Stmt::Kind::kIf: {
        const int cond_id = s.expr->loc.node_id;
        bool outcome;
        if (directive_ &&
            directive_->kind == Directive::Kind::kForceCondition &&
            directive_->node_id == cond_id) {
          outcome = directive_->value;
        } else {
          outcome = Eval(*s.expr).AsBool();
        }
        record_.condition_evals.push_back(
            {cond_id, ++hits_[cond_id], outcome, Snapshot(id)});
        if (outcome) return ExecBlock(*s.then_block);
        if (s.else_block) return ExecBlock(*s.else_block);
        return false;
      }
      case Stmt::Kind::kWhile:
        while (Eval(*s.expr).AsBool()) {
          if (ExecBlock(*s.then_block)) return true;
          Step(s.loc);
        }
        return false;
      case Stmt::Kind::kReturn:
        result_ = Eval(*s.expr);
        return true;
      case Stmt::Kind::kBlock:
        return ExecBlock(s);
    }
    return false;
  }

  void Assign(const Expr& target, Value value) {
    if (target.kind == Expr::Kind::kVar) {
      env_[target.name] = std::move(value);
      return;
    }
    const Expr& array_expr = *target.args[0];
    Value index = Eval(*target.args[1]);
    Value& array = env_.at(array_expr.name);
    int64_t i = CheckIndex(array, index.AsInt(), target.loc);
    if (array.type() == Type::kIntArray) {
      array.MutableIntArray()[i] = value.AsInt();
    } else {
      array.MutableRealArray()[i] = value.AsReal();
    }
  }

  static int64_t CheckIndex(const Value& array, int64_t i,
                            const SourceLoc& loc) {
    if (i < 0 || i >= array.ArrayLength()) {
      throw Fault{RuntimeErrorKind::kIndexOutOfBounds, loc};
    }
    return i;
  }

  Value Eval(const Expr& e) {
    Value v = EvalUnchecked(e);
    if (!e.type || v.type() != *e.type) {
      throw std::logic_error("runtime value does not match static type at " +
                             std::to_string(e.loc.line) + ":" +
                             std::to_string(e.loc.col));
    }
    return v;
  }

  Value EvalUnchecked(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kLiteral:
        return e.literal;
      case Expr::Kind::kVar:
        return env_.at(e.name);
      case Expr::Kind::kUnary: {
        Value v = Eval(*e.args[0]);
        if (e.unary_op == UnaryOp::kNot) return Value::Bool(!v.AsBool());
        if (v.type() == Type::kReal) return Value::Real(-v.AsReal());
        if (v.AsInt() == INT64_MIN) {
          throw Fault{RuntimeErrorKind::kIntegerOverflow, e.loc};
        }
        return Value::Int(-v.AsInt());
      }
      case Expr::Kind::kBinary:
        return EvalBinary(e);
      case Expr::Kind::kIndex: {
        Value array = Eval(*e.args[0]);
        int64_t i = CheckIndex(array, Eval(*e.args[1]).AsInt(), e.loc);
        if (array.type() == Type::kIntArray) {
          return Value::Int(array.AsIntArray()[i]);
        }
        return Value::Real(array.AsRealArray()[i]);
      }
      case Expr::Kind::kCall:
        return EvalCall(e);
    }
    throw std::logic_error("unhandled expression kind");
  }

  Value EvalBinary(const Expr& e) {
    const BinaryOp op = e.binary_op;
    if (op == BinaryOp::kAnd || op == BinaryOp::kOr) {
      bool lhs = Eval(*e.args[0]).AsBool();
      if (op == BinaryOp::kAnd && !lhs) return Value::Bool(false);
      if (op == BinaryOp::kOr && lhs) return Value::Bool(true);
      return Value::Bool(Eval(*e.args[1]).AsBool());
    }
    Value l = Eval(*e.args[0]);
    Value r = Eval(*e.args[1]);
    if (l.type() == Type::kInt) {
      int64_t a = l.AsInt();
      int64_t b = r.AsInt();
      int64_t out = 0;
      switch (op) {
        case BinaryOp::kLt:
          return Value::Bool(a < b);
        case BinaryOp::kLe:
          return Value::Bool(a <= b);
        case BinaryOp::kGt:
          return Value::Bool(a > b);
        case BinaryOp::kGe:
          return Value::Bool(a >= b);
        case BinaryOp::kEq:
          return Value::Bool(a == b);
        case BinaryOp::kNe:
          return Value::Bool(a != b);
        case BinaryOp::kAdd:
          if (__builtin_add_overflow(a, b, &out)) break;
          return Value::Int(out);
        case BinaryOp::kSub:
          if (__builtin_sub_overflow(a, b, &out)) break;
          return Value::Int(out);
        case BinaryOp::kMul:
          if (__builtin_mul_overflow(a, b, &out)) break;
          return Value::Int(out);
        case BinaryOp::kDiv:
          if (b == 0) throw Fault{RuntimeErrorKind::kDivisionByZero, e.loc};
          if (a == INT64_MIN && b == -1) break;
          return Value::Int(a / b);
        default:
          throw std::logic_error("bad int operator");
      }
      throw Fault{RuntimeErrorKind::kIntegerOverflow, e.loc};
    }
    double a = l.AsReal();
    double b = r.AsReal();
    switch (op) {
      case BinaryOp::kLt:
        return Value::Bool(a < b);
      case BinaryOp::kLe:
        return Value::Bool(a <= b);
      case BinaryOp::kGt:
        return Value::Bool(a > b);
      case BinaryOp::kGe:
        return Value::Bool(a >= b);
      case BinaryOp::kEq:
        return Value::Bool(a == b);
      case BinaryOp::kNe:
        return Value::Bool(a != b);
      case BinaryOp::kAdd:
        return Value::Real(a + b);
      case BinaryOp::kSub:
        return Value::Real(a - b);
      case BinaryOp::kMul:
        return Value::Real(a * b);
      case BinaryOp::kDiv:
        return Value::Real(a / b);
      default:
        throw std::logic_error("bad real operator");
    }
  }

  Value EvalCall(const Expr& e) {
    Value arg = Eval(*e.args[0]);
    if (e.name == "len") return Value::Int(arg.ArrayLength());
    if (e.name == "floor") return Value::Real(std::floor(arg.AsReal()));
    if (e.name == "real") return Value::Real(static_cast<double>(arg.AsInt()));
    if (e.name == "int") {
      double d = std::trunc(arg.AsReal());
      // [-2^63, 2^63) is exactly representable at both ends.
      if (!(d >= -9223372036854775808.0 && d < 9223372036854775808.0)) {
        throw Fault{RuntimeErrorKind::kInvalidConversion, e.loc};
      }
      return Value::Int(static_cast<int64_t>(d));
    }
    if (e.name == "sort") {
      if (arg.type() == Type::kIntArray) {
        auto& a = arg.MutableIntArray();
        std::sort(a.begin(), a.end());
      } else {
        auto& a = arg.MutableRealArray();
        // NaNs last keeps the comparator a strict weak order.
        std::sort(a.begin(), a.end(), [](double x, double y) {
          if (std::isnan(x)) return false;
          if (std::isnan(y)) return true;
          return x < y;
        });
      }
      return arg;
    }
    throw std::logic_error("unknown built-in " + e.name);
  }

  const TypedProgram& program_;
  const std::optional<Directive>& directive_;
  bool instrument_;
  const RunOptions& options_;
  ExecutionRecord& record_;
  std::unordered_map<std::string, Value> env_;
  std::unordered_map<int, int> hits_;
  std::optional<Value> result_;
};

void ValidateDirective(const TypedProgram& program, const Directive& d) {
  if (d.kind == Directive::Kind::kForceCondition) {
    if (!program.IfOfCondition(d.node_id)) {
      throw std::invalid_argument("node " + std::to_string(d.node_id) +
                                  " is not an if-condition");
    }
  } else if (!program.IsSkippable(d.node_id)) {
    throw std::invalid_argument("node " + std::to_string(d.node_id) +
                                " is not a skippable statement");
  }
}

}  // namespace

ExecutionRecord RunTest(const TypedProgram& program, const TestCase& test,
                        const std::optional<Directive>& directive,
                        bool instrument, const RunOptions& options) {
  ValidateTestCase(program, test);
  if (directive) ValidateDirective(program, *directive);
  const Function& f = *program.program().FindFunction(test.function);

  ExecutionRecord record;
  Executor executor(program, directive, instrument, options, record);
  try {
    Value actual = executor.Call(f, test.inputs);
    record.status = ValuesMatch(test.expected, actual, options.real_tolerance)
                        ? TestStatus::kPass
                        : TestStatus::kFail;
    record.actual = std::move(actual);
  } catch (const Fault& fault) {
    record.status = TestStatus::kRuntimeError;
    record.error_kind = fault.kind;
    record.error_loc = fault.loc;
  }
  return record;
}

std::vector<ExecutionRecord> RunSuite(const TypedProgram& program,
                                      const std::vector<TestCase>& suite,
                                      bool instrument,
                                      const RunOptions& options) {
  std::vector<ExecutionRecord> records;
  records.reserve(suite.size());
  for (const auto& test : suite) {
    records.push_back(RunTest(program, test, std::nullopt, instrument, options));
  }
  return records;
}

}  // namespace minipol
