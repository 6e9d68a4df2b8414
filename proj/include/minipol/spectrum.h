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

#ifndef MINIPOL_SPECTRUM_H_
#define MINIPOL_SPECTRUM_H_

#include <string>
#include <vector>

#include "minipol/interpreter.h"
#include "minipol/type_checker.h"

namespace minipol {

struct StatementSpectrum {
  int node_id;
  SourceLoc loc;
  Stmt::Kind kind;
  int failed;  // failing tests that covered the statement
  int passed;
  double suspiciousness;
};

struct Spectrum {
  int total_failed = 0;
  int total_passed = 0;
  // All non-block statements, most suspicious first. Ties are broken by
  // source position so the order is deterministic.
  std::vector<StatementSpectrum> ranking;

  const StatementSpectrum* Find(int node_id) const;
};

// failed / sqrt(total_failed * (failed + passed)); 0 when the denominator
// is 0.
double Ochiai(int failed, int passed, int total_failed);

// A runtime error counts as a failure. `records` is parallel to the suite
// that produced it. Throws InputError when no test fails.
Spectrum BuildSpectrum(const TypedProgram& program,
                       const std::vector<ExecutionRecord>& records);

// Condition expression ids of covered-by-a-failure if statements, in
// ranking order.
std::vector<int> RankedConditions(const TypedProgram& program,
                                  const Spectrum& spectrum);

// Skippable statements covered by a failing test, in ranking order.
std::vector<int> RankedSkippableStatements(const TypedProgram& program,
                                           const Spectrum& spectrum);

// Tab-separated: node_id, line, col, kind, failed, passed, suspiciousness.
std::string SpectrumToTsv(const Spectrum& spectrum);

std::string StmtKindName(Stmt::Kind kind);

}  // namespace minipol

#endif  // MINIPOL_SPECTRUM_H_
