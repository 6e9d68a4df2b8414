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

#include "minipol/repair.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minipol/error.h"
#include "minipol/printer.h"
#include "minipol/synth/synthesizer.h"

namespace minipol {

std::string NoPatchReasonName(NoPatchReason reason) {
  switch (reason) {
    case NoPatchReason::kNone:
      return "";
    case NoPatchReason::kNoAngelicPair:
      return "no_angelic_pair";
    case NoPatchReason::kSynthesisNotFound:
      return "synthesis_not_found";
    case NoPatchReason::kValidationRegression:
      return "validation_regression";
    case NoPatchReason::kTrivialPatchGuard:
      return "trivial_patch_guard";
    case NoPatchReason::kTimeout:
      return "timeout";
  }
  return "";
}

namespace {

using Clock = std::chrono::steady_clock;

StmtPtr* FindSlot(StmtPtr& stmt, int id) {
  if (stmt->loc.node_id == id) return &stmt;
  for (auto& s : stmt->statements) {
    if (StmtPtr* found = FindSlot(s, id)) return found;
  }
  for (StmtPtr* child : {&stmt->then_block, &stmt->else_block}) {
    if (*child) {
      if (StmtPtr* found = FindSlot(*child, id)) return found;
    }
  }
  return nullptr;
}

std::string LeadingSpace(const std::string& line) {
  return line.substr(0, line.find_first_not_of(" \t") == std::string::npos
                            ? line.size()
                            : line.find_first_not_of(" \t"));
}

std::string RTrim(std::string s) {
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

struct TextEdit {
  int first_line = 0;  // 1-based, inclusive
  int last_line = 0;
  std::vector<std::string> replacement;
};

// Rewrites the `if (...)` head of an if statement, keeping the rest.
TextEdit ConditionEdit(const Program& program, const Stmt& stmt,
                       const std::string& head) {
  const auto& lines = program.source_lines;
  TextEdit edit{stmt.loc.line, stmt.then_block->loc.line, {}};
  std::string prefix = lines[edit.first_line - 1].substr(0, stmt.loc.col - 1);
  std::string suffix =
      lines[edit.last_line - 1].substr(stmt.then_block->loc.col - 1);
  edit.replacement.push_back(prefix + head + " " + suffix);
  return edit;
}

// Wraps the statement's text in `if (...) { ... }`.
TextEdit GuardEdit(const Program& program, const Stmt& stmt,
                   const std::string& head) {
  const auto& lines = program.source_lines;
  TextEdit edit{stmt.loc.line, stmt.end.line, {}};
  const std::string& first = lines[edit.first_line - 1];
  const std::string indent = LeadingSpace(first);
  std::vector<std::string> body;
  for (int l = edit.first_line; l <= edit.last_line; ++l) {
    const std::string& text = lines[l - 1];
    size_t from = l == edit.first_line ? stmt.loc.col - 1 : 0;
    size_t to = l == edit.last_line ? stmt.end.col - 1 : text.size();
    body.push_back(text.substr(from, to - from));
  }
  edit.replacement.push_back(first.substr(0, stmt.loc.col - 1) + head + " {");
  for (size_t i = 0; i < body.size(); ++i) {
    edit.replacement.push_back(RTrim((i == 0 ? indent + "  " : "  ") + body[i]));
  }
  edit.replacement.push_back(
      indent + "}" + lines[edit.last_line - 1].substr(stmt.end.col - 1));
  return edit;
}

std::string UnifiedDiff(const Program& program, const TextEdit& edit) {
  const int old_count = edit.last_line - edit.first_line + 1;
  std::ostringstream out;
  out << "--- a/" << program.file << "\n+++ b/" << program.file << "\n";
  out << "@@ -" << edit.first_line << "," << old_count << " +"
      << edit.first_line << "," << edit.replacement.size() << " @@\n";
  for (int l = edit.first_line; l <= edit.last_line; ++l) {
    out << "-" << program.source_lines[l - 1] << "\n";
  }
  for (const auto& line : edit.replacement) out << "+" << line << "\n";
  return out.str();
}

std::string ApplyEdit(const Program& program, const TextEdit& edit) {
  std::ostringstream out;
  const auto& lines = program.source_lines;
  for (int l = 1; l <= static_cast<int>(lines.size()); ++l) {
    if (l == edit.first_line) {
      for (const auto& r : edit.replacement) out << r << "\n";
    }
    if (l < edit.first_line || l > edit.last_line) out << lines[l - 1] << "\n";
  }
  return out.str();
}

std::string Trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

class Driver {
 public:
  Driver(const TypedProgram& program, const std::vector<TestCase>& suite,
         const RepairOptions& options)
      : program_(program),
        suite_(suite),
        options_(options),
        start_(Clock::now()),
        deadline_(start_ + options.budget) {}

  RepairResult Run() {
    for (const auto& test : suite_) ValidateTestCase(program_, test);
    if (options_.solver == SolverKind::kSmtlibExport &&
        options_.smt_out_dir.empty()) {
      throw InputError("SMT-LIB export needs an output directory");
    }
    std::vector<ExecutionRecord> baseline =
        RunSuite(program_, suite_, false, options_.run);
    result_.test_executions += baseline.size();
    std::vector<TestCase> failing;
    for (size_t i = 0; i < suite_.size(); ++i) {
      if (baseline[i].passed()) {
        ++result_.tests_passing;
      } else {
        failing.push_back(suite_[i]);
      }
    }
    result_.tests_failing = static_cast<int>(failing.size());
    if (failing.empty()) {
      throw InputError("nothing to repair: all " +
                       std::to_string(suite_.size()) + " tests pass");
    }
    if (result_.tests_passing == 0) {
      throw InputError(
          "no test passes; at least one passing test is needed to tell a "
          "repair from a rewrite");
    }
    result_.spectrum = BuildSpectrum(program_, baseline);

    LocalizationOptions loc_options;
    loc_options.run = options_.run;
    loc_options.should_stop = [this] { return Expired(); };

    int pairs_found = 0;
    if (options_.mode != RepairMode::kPrecondition) {
      auto ranked = RankedConditions(program_, result_.spectrum);
      result_.candidates_by_phase["condition"] = ranked.size();
      auto found = LocateConditionFixes(program_, failing, ranked,
                                        result_.spectrum, loc_options);
      pairs_found += Consume(found);
    }
    if (!result_.patch && options_.mode != RepairMode::kCondition &&
        !timed_out_) {
      auto ranked = RankedSkippableStatements(program_, result_.spectrum);
      result_.candidates_by_phase["precondition"] = ranked.size();
      auto found = LocatePreconditionFixes(program_, failing, ranked,
                                           result_.spectrum, loc_options);
      pairs_found += Consume(found);
    }
    if (!result_.patch) result_.reason = Reason(pairs_found);
    result_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_)
            .count();
    return std::move(result_);
  }

 private:
  bool Expired() {
    if (Clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  int Consume(const LocalizationResult& found) {
    result_.test_executions += found.executions;
    if (found.stopped) timed_out_ = true;
    for (const auto& pair : found.pairs) {
      if (result_.patch || Expired()) break;
      ++result_.pairs_examined;
      TryPair(pair);
    }
    return static_cast<int>(found.pairs.size());
  }

  NoPatchReason Reason(int pairs_found) const {
    auto any = [&](const char* outcome) {
      return std::any_of(result_.attempts.begin(), result_.attempts.end(),
                         [&](const PairAttempt& a) { return a.outcome == outcome; });
    };
    if (pairs_found == 0) {
      return timed_out_ ? NoPatchReason::kTimeout
                        : NoPatchReason::kNoAngelicPair;
    }
    if (any("regression")) return NoPatchReason::kValidationRegression;
    if (timed_out_ || any("timeout")) return NoPatchReason::kTimeout;
    if (std::all_of(result_.attempts.begin(), result_.attempts.end(),
                    [](const PairAttempt& a) { return a.outcome == "guard"; })) {
      return NoPatchReason::kTrivialPatchGuard;
    }
    return NoPatchReason::kSynthesisNotFound;
  }

  void Note(PairAttempt attempt) {
    const char* kind =
        attempt.pair.kind == AngelicPair::Kind::kCondition ? "condition"
                                                           : "precondition";
    std::string line = std::string(kind) + " at line " +
                       std::to_string(attempt.pair.loc.line) + ": " +
                       attempt.outcome;
    if (!attempt.expression.empty()) line += " (" + attempt.expression + ")";
    if (!attempt.diagnostic.empty()) line += ": " + attempt.diagnostic;
    result_.diagnostics.push_back(line);
    result_.attempts.push_back(std::move(attempt));
  }

  void ExportSystem(const ConstraintSystem& system, int node_id) {
    namespace fs = std::filesystem;
    fs::create_directories(options_.smt_out_dir);
    std::string stem = fs::path(program_.program().file).stem().string();
    if (stem.empty()) stem = "program";
    fs::path path = fs::path(options_.smt_out_dir) /
                    (stem + "_" + std::to_string(node_id) + "_L" +
                     std::to_string(system.level) + ".smt2");
    std::ofstream out(path);
    out << system.ToSmtLib();
    if (!out) throw InputError("cannot write " + path.string());
    result_.smt_files.push_back(path.string());
  }

  void TryPair(const AngelicPair& pair) {
    PairAttempt attempt;
    attempt.pair = pair;
    SynthesisInput input = CollectTrace(program_, suite_, pair,
                                        options_.constants, options_.run);
    result_.test_executions += input.executions;
    for (const auto& w : input.warnings) {
      result_.diagnostics.push_back("line " + std::to_string(pair.loc.line) +
                                    ": " + w);
    }
    result_.traces.push_back(input);

    SynthesisOptions synth;
    synth.max_level = options_.max_level;
    synth.trivial_guard = options_.trivial_guard;
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline_ - Clock::now());
    synth.budget = std::max(std::chrono::milliseconds(0),
                            std::min(options_.synth_budget, remaining));
    if (options_.solver == SolverKind::kSmtlibExport) {
      synth.on_system = [&](const ConstraintSystem& system) {
        ExportSystem(system, pair.node_id);
      };
    }
    SynthesisResult synthesized =
        Synthesize(input, program_.ScopeAt(pair.statement_id), synth);
    result_.solver_nodes += synthesized.solver_nodes;
    attempt.diagnostic = synthesized.diagnostic;
    if (synthesized.status == SynthesisResult::Status::kTimeout) {
      attempt.outcome = "timeout";
      return Note(std::move(attempt));
    }
    if (synthesized.status == SynthesisResult::Status::kNotFound) {
      attempt.outcome = synthesized.guard_refused ? "guard" : "not_found";
      return Note(std::move(attempt));
    }

    const Expr* original = nullptr;
    if (pair.kind == AngelicPair::Kind::kCondition) {
      original = program_.FindExpr(pair.node_id);
    }
    ExprPtr expr =
        OrientLikeOriginal(std::move(synthesized.expression), original);
    attempt.expression = PrettyPrint(*expr);
    attempt.level = synthesized.level;

    std::optional<TypedProgram> checked;
    try {
      checked = ApplyPatch(program_, pair, *expr);
    } catch (const TypeErrors& e) {
      // Guarding the only return of a path leaves a path without one.
      attempt.outcome = "regression";
      attempt.diagnostic = std::string("patched program is rejected: ") +
                           e.what();
      return Note(std::move(attempt));
    }
    const TypedProgram& patched = *checked;
    std::vector<ExecutionRecord> validation =
        RunSuite(patched, suite_, false, options_.run);
    result_.test_executions += validation.size();
    std::vector<std::string> broken;
    for (size_t i = 0; i < suite_.size(); ++i) {
      if (!validation[i].passed()) {
        broken.push_back(suite_[i].name + " " + validation[i].Describe());
      }
    }
    if (!broken.empty()) {
      attempt.outcome = "regression";
      attempt.diagnostic = "tests failing under the patch:";
      for (const auto& b : broken) attempt.diagnostic += " " + b + ";";
      attempt.diagnostic.pop_back();
      return Note(std::move(attempt));
    }

    attempt.outcome = "patched";
    result_.patch = MakePatch(pair, *expr, synthesized.level, patched);
    Note(std::move(attempt));
  }

  Patch MakePatch(const AngelicPair& pair, const Expr& expr, int level,
                  const TypedProgram& patched) {
    const Program& original = program_.program();
    const Stmt& stmt = *program_.FindStmt(pair.statement_id);
    Patch patch;
    patch.kind = pair.kind;
    patch.loc = pair.loc;
    patch.expression = PrettyPrint(expr);
    patch.level = level;
    const std::string head = "if (" + patch.expression + ")";
    if (pair.kind == AngelicPair::Kind::kCondition) {
      patch.before = "if (" + PrettyPrint(*stmt.expr) + ")";
      patch.after = head;
    } else {
      patch.before = Trimmed(PrettyPrint(stmt));
      // Preorder numbering gives the new guard the id of what it wraps.
      patch.after = Trimmed(
          PrettyPrint(*patched.FindStmt(pair.statement_id)));
    }
    if (!original.source_lines.empty()) {
      TextEdit edit = pair.kind == AngelicPair::Kind::kCondition
                          ? ConditionEdit(original, stmt, head)
                          : GuardEdit(original, stmt, head);
      patch.diff = UnifiedDiff(original, edit);
      patch.patched_source = ApplyEdit(original, edit);
    }
    patch.patched = Clone(patched.program());
    return patch;
  }

  const TypedProgram& program_;
  const std::vector<TestCase>& suite_;
  const RepairOptions& options_;
  const Clock::time_point start_;
  const Clock::time_point deadline_;
  bool timed_out_ = false;
  RepairResult result_;
};

}  // namespace

ExprPtr OrientLikeOriginal(ExprPtr expr, const Expr* original) {
  if (expr->kind != Expr::Kind::kBinary || !IsComparison(expr->binary_op)) {
    return expr;
  }
  const Expr& lhs = *expr->args[0];
  const Expr& rhs = *expr->args[1];
  bool mirror = lhs.kind == Expr::Kind::kLiteral &&
                rhs.kind != Expr::Kind::kLiteral;
  if (!mirror && original && original->kind == Expr::Kind::kBinary &&
      IsComparison(original->binary_op) &&
      original->args[0]->kind == Expr::Kind::kVar) {
    const std::string& lead = original->args[0]->name;
    mirror = rhs.kind == Expr::Kind::kVar && rhs.name == lead &&
             !(lhs.kind == Expr::Kind::kVar && lhs.name == lead);
  }
  if (mirror) {
    std::swap(expr->args[0], expr->args[1]);
    expr->binary_op = Mirror(expr->binary_op);
  }
  return expr;
}

TypedProgram ApplyPatch(const TypedProgram& program, const AngelicPair& pair,
                        const Expr& expression) {
  Program patched = Clone(program.program());
  StmtPtr* slot = nullptr;
  for (auto& f : patched.functions) {
    if ((slot = FindSlot(f.body, pair.statement_id))) break;
  }
  if (!slot) throw std::invalid_argument("repair site is not in the program");
  if (pair.kind == AngelicPair::Kind::kCondition) {
    ExprPtr replacement = Clone(expression);
    replacement->loc.line = (*slot)->expr->loc.line;
    replacement->loc.col = (*slot)->expr->loc.col;
    (*slot)->expr = std::move(replacement);
  } else {
    auto guard = std::make_unique<Stmt>();
    guard->kind = Stmt::Kind::kIf;
    guard->loc = (*slot)->loc;
    guard->end = (*slot)->end;
    guard->expr = Clone(expression);
    std::vector<StmtPtr> body;
    body.push_back(std::move(*slot));
    guard->then_block = MakeBlock(std::move(body));
    guard->then_block->loc = guard->loc;
    guard->then_block->end = guard->end;
    *slot = std::move(guard);
  }
  AssignNodeIds(patched);
  return TypeCheck(std::move(patched));
}

RepairResult Repair(const TypedProgram& program,
                    const std::vector<TestCase>& suite,
                    const RepairOptions& options) {
  return Driver(program, suite, options).Run();
}

}  // namespace minipol
