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

#ifndef MINIPOL_SYNTH_SMTLIB_H_
#define MINIPOL_SYNTH_SMTLIB_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minipol/synth/constraint_system.h"
#include "minipol/synth/sexpr.h"

namespace minipol {

class SmtError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SmtSort { kBool, kInt, kReal };

// A value of one of the three sorts. Int is wide enough for any product of
// two 64-bit integers.
struct SmtValue {
  SmtSort sort = SmtSort::kBool;
  bool b = false;
  __int128 i = 0;
  double r = 0.0;

  static SmtValue Bool(bool v) { return {SmtSort::kBool, v, 0, 0.0}; }
  static SmtValue Int(__int128 v) { return {SmtSort::kInt, false, v, 0.0}; }
  static SmtValue Real(double v) { return {SmtSort::kReal, false, 0, v}; }
};

using SmtAssignment = std::map<std::string, SmtValue>;

// A script restricted to the commands the exporter emits: set-option,
// set-logic, declare-fun (nullary), declare-const, assert, check-sat,
// get-value and exit. Every assertion is sort-checked.
struct SmtScript {
  std::string logic;
  std::map<std::string, SmtSort> declarations;
  std::vector<SExpr> assertions;
  std::vector<std::string> get_value;
  int check_sat_count = 0;
};

SmtScript ParseSmtScript(std::string_view text);

// Evaluates a Bool term. Throws SmtError on unassigned variables.
bool EvaluateAssertion(const SExpr& term, const SmtAssignment& assignment);

// True when every assertion holds.
bool Satisfies(const SmtScript& script, const SmtAssignment& assignment);

// Extends a location model with the value of every per-row variable,
// computing each block on its argument values.
SmtAssignment CompleteAssignment(const ConstraintSystem& system,
                                 const LocationModel& model);

struct SolverReply {
  std::string status;  // "sat", "unsat", "unknown" or "" if absent
  LocationModel model;
};

// Reads a solver's reply to check-sat and get-value, e.g.
// "sat\n((l_r 9) (l_in_1 1))". Integer values may be written as (- n).
SolverReply ParseSolverReply(std::string_view text);

}  // namespace minipol

#endif  // MINIPOL_SYNTH_SMTLIB_H_
