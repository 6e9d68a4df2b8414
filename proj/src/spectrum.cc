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

#include "minipol/spectrum.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "minipol/error.h"

namespace minipol {

const StatementSpectrum* Spectrum::Find(int node_id) const {
  for (const auto& s : ranking) {
    if (s.node_id == node_id) return &s;
  }
  return nullptr;
}

double Ochiai(int failed, int passed, int total_failed) {
  const double denominator =
      std::sqrt(static_cast<double>(total_failed) * (failed + passed));
  if (denominator == 0.0) return 0.0;
  return failed / denominator;
}

Spectrum BuildSpectrum(const TypedProgram& program,
                       const std::vector<ExecutionRecord>& records) {
  Spectrum spectrum;
  for (const auto& r : records) {
    (r.passed() ? spectrum.total_passed : spectrum.total_failed)++;
  }
  if (spectrum.total_failed == 0) {
    throw InputError("nothing to localize: every test passes");
  }
  for (int id : program.StatementIds()) {
    const Stmt* stmt = program.FindStmt(id);
    StatementSpectrum s{id, stmt->loc, stmt->kind, 0, 0, 0.0};
    for (const auto& r : records) {
      if (!r.covered_statements.count(id)) continue;
      (r.passed() ? s.passed : s.failed)++;
    }
    s.suspiciousness = Ochiai(s.failed, s.passed, spectrum.total_failed);
    spectrum.ranking.push_back(s);
  }
  std::stable_sort(spectrum.ranking.begin(), spectrum.ranking.end(),
                   [](const StatementSpectrum& a, const StatementSpectrum& b) {
                     if (a.suspiciousness != b.suspiciousness) {
                       return a.suspiciousness > b.suspiciousness;
                     }
                     if (a.loc.line != b.loc.line) {
                       return a.loc.line < b.loc.line;
                     }
                     return a.loc.col < b.loc.col;
                   });
  return spectrum;
}

std::vector<int> RankedConditions(const TypedProgram& program,
                                  const Spectrum& spectrum) {
  std::vector<int> out;
  for (const auto& s : spectrum.ranking) {
    if (s.kind != Stmt::Kind::kIf || s.failed == 0) continue;
    out.push_back(*program.ConditionOfIf(s.node_id));
  }
  return out;
}

std::vector<int> RankedSkippableStatements(const TypedProgram& program,
                                           const Spectrum& spectrum) {
  std::vector<int> out;
  for (const auto& s : spectrum.ranking) {
    if (s.failed > 0 && program.IsSkippable(s.node_id)) {
      out.push_back(s.node_id);
    }
  }
  return out;
}

std::string StmtKindName(Stmt::Kind kind) {
  switch (kind) {
    case Stmt::Kind::kDecl:
      return "let";
    case Stmt::Kind::kAssign:
      return "assign";
    case Stmt::Kind::kIf:
      return "if";
    case Stmt::Kind::kWhile:
      return "while";
    case Stmt::Kind::kReturn:
      return "return";
    case Stmt::Kind::kBlock:
      return "block";
  }
  return "?";
}

std::string SpectrumToTsv(const Spectrum& spectrum) {
  std::ostringstream out;
  out << "node_id\tline\tcol\tkind\tfailed\tpassed\tsuspiciousness\n";
  for (const auto& s : spectrum.ranking) {
    char susp[32];
    std::snprintf(susp, sizeof susp, "%.6f", s.suspiciousness);
    out << s.node_id << '\t' << s.loc.line << '\t' << s.loc.col << '\t'
        << StmtKindName(s.kind) << '\t' << s.failed << '\t' << s.passed
        << '\t' << susp << '\n';
  }
  return out.str();
}

}  // namespace minipol
