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

#ifndef MINIPOL_TESTS_Z3_RUNNER_H_
#define MINIPOL_TESTS_Z3_RUNNER_H_

// Runs an exported script through z3's Python bindings, when present.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "minipol/synth/smtlib.h"

namespace minipol::testing {

inline std::string RunCommand(const std::string& command, int* status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

inline bool Z3Available() {
  static const bool available = [] {
    int status = 0;
    RunCommand("python3 -c 'import z3' >/dev/null 2>&1", &status);
    return status == 0;
  }();
  return available;
}

// Asks z3 for the script's satisfiability and the values of `variables`,
// answering in the shape of a get-value reply. nullopt if z3 could not be
// run.
inline std::optional<SolverReply> SolveWithZ3(
    const std::string& smt, const std::vector<std::string>& variables,
    const std::string& scratch) {
  {
    std::ofstream f(scratch);
    f << smt;
  }
  const std::string script = scratch + ".py";
  {
    std::ofstream f(script);
    f << "import sys, z3\n"
         "s = z3.Solver()\n"
         "s.from_file(sys.argv[1])\n"
         "r = s.check()\n"
         "print(r)\n"
         "if r == z3.sat:\n"
         "    m = s.model()\n"
         "    print('(' + ' '.join('(%s %s)' % (n, m.eval(z3.Int(n), "
         "model_completion=True).sexpr()) for n in sys.argv[2:]) + ')')\n";
  }
  std::string command = "python3 " + script + " " + scratch;
  for (const auto& v : variables) command += " " + v;
  int status = 0;
  std::string out = RunCommand(command + " 2>/dev/null", &status);
  if (status != 0) return std::nullopt;
  return ParseSolverReply(out);
}

}  // namespace minipol::testing

#endif  // MINIPOL_TESTS_Z3_RUNNER_H_
