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

// Command-line front end: repair a program, run its tests, or replay the
// bundled corpus.
//
// Exit status: 0 on success (patch found, all tests pass, corpus matches),
// 1 when the tool ran but the answer is negative, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "minipol/corpus.h"
#include "minipol/error.h"
#include "minipol/report.h"
#include "minipol/spectrum.h"
#include "minipol/test_suite.h"

namespace {

using namespace minipol;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

void WriteText(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!out) throw InputError("cannot write '" + path + "'");
}

struct RepairArgs {
  std::string program;
  std::string tests;
  std::string mode = "both";
  std::string solver = "internal";
  int max_level = kMaxLevel;
  std::string constants = "default";
  int64_t budget_ms = 60'000;
  int64_t synth_budget_ms = 10'000;
  std::string dump_spectrum;
  std::string dump_trace;
  std::string smt_out;
  std::string report;
  std::string write_patched;
};

int RunRepair(const RepairArgs& args) {
  TypedProgram program = LoadProgram(args.program);
  auto suite = LoadTestSuite(args.tests, program);

  RepairOptions options;
  options.mode = ParseRepairMode(args.mode);
  options.constants = ParseConstantStrategy(args.constants);
  options.max_level = args.max_level;
  options.budget = std::chrono::milliseconds(args.budget_ms);
  options.synth_budget = std::chrono::milliseconds(args.synth_budget_ms);
  if (args.solver == "smtlib-export") {
    options.solver = SolverKind::kSmtlibExport;
    options.smt_out_dir = args.smt_out.empty() ? "." : args.smt_out;
  } else if (args.solver != "internal") {
    throw InputError("unknown solver '" + args.solver + "'");
  }

  RepairResult result = Repair(program, suite, options);
  if (!args.dump_spectrum.empty()) {
    WriteText(args.dump_spectrum, SpectrumToTsv(result.spectrum));
  }
  if (!args.dump_trace.empty()) {
    WriteText(args.dump_trace, TracesToJson(result.traces));
  }
  if (!args.report.empty()) {
    WriteText(args.report, ReportToJson(result, args.program));
  }
  if (!args.write_patched.empty() && result.patched()) {
    WriteText(args.write_patched, result.patch->patched_source);
  }
  std::cout << FormatHumanReport(result, args.program);
  if (result.patched()) std::cout << "\n" << result.patch->diff;
  std::printf("(%d failing of %d tests, %lld test executions, %lld solver "
              "nodes, %.1f ms)\n",
              result.tests_failing,
              result.tests_failing + result.tests_passing,
              static_cast<long long>(result.test_executions),
              static_cast<long long>(result.solver_nodes), result.elapsed_ms);
  return result.patched() ? kOk : kNegative;
}

int RunTests(const std::string& program_path, const std::string& tests_path) {
  TypedProgram program = LoadProgram(program_path);
  auto suite = LoadTestSuite(tests_path, program);
  int failing = 0;
  for (const auto& test : suite) {
    ExecutionRecord r = RunTest(program, test);
    if (!r.passed()) ++failing;
    std::cout << test.name << ": " << r.Describe() << "\n";
  }
  std::cout << suite.size() - failing << " passed, " << failing
            << " failed\n";
  return failing == 0 ? kOk : kNegative;
}

int RunCorpus(const std::string& dir) {
  int mismatched = 0;
  for (const auto& case_dir : ListCorpusCases(dir)) {
    CorpusOutcome outcome = RunCorpusCase(case_dir);
    const RepairResult& r = outcome.result;
    std::cout << (outcome.ok() ? "ok      " : "MISMATCH") << "  "
              << outcome.name << "  ";
    if (r.patched()) {
      std::cout << "line " << r.patch->loc.line << ": " << r.patch->expression
                << " (level " << r.patch->level << ")";
    } else {
      std::cout << "NO_PATCH " << NoPatchReasonName(r.reason);
    }
    std::cout << "\n";
    for (const auto& m : outcome.mismatches) std::cout << "    " << m << "\n";
    if (!outcome.ok()) ++mismatched;
  }
  return mismatched == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repairs if-conditions and missing guards in minipol programs "
               "from a test suite.\nMINIPOL_SEED is accepted for reproducible "
               "tooling but has no effect: every phase is deterministic."};
  app.require_subcommand(1);

  RepairArgs repair;
  CLI::App* repair_cmd =
      app.add_subcommand("repair", "Search for a patch that makes all tests pass");
  repair_cmd->add_option("program", repair.program, "Program file (.mini)")
      ->required()
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("tests", repair.tests, "Test suite (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--mode", repair.mode, "condition, precondition or both")
      ->check(CLI::IsMember({"condition", "precondition", "both"}))
      ->capture_default_str();
  repair_cmd->add_option("--solver", repair.solver,
                         "internal, or smtlib-export to also write each "
                         "constraint system to --smt-out")
      ->check(CLI::IsMember({"internal", "smtlib-export"}))
      ->capture_default_str();
  repair_cmd->add_option("--max-level", repair.max_level,
                         "Highest operator level to try")
      ->check(CLI::Range(0, kMaxLevel))
      ->capture_default_str();
  repair_cmd->add_option("--constants", repair.constants, "default or mined")
      ->check(CLI::IsMember({"default", "mined"}))
      ->capture_default_str();
  repair_cmd->add_option("--budget-ms", repair.budget_ms, "Overall time budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  repair_cmd->add_option("--synth-budget-ms", repair.synth_budget_ms,
                         "Time budget per synthesis call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  repair_cmd->add_option("--dump-spectrum", repair.dump_spectrum,
                         "Write the suspiciousness ranking as TSV ('-' for stdout)");
  repair_cmd->add_option("--dump-trace", repair.dump_trace,
                         "Write the collected observations as JSON");
  repair_cmd->add_option("--smt-out", repair.smt_out,
                         "Directory for exported .smt2 files");
  repair_cmd->add_option("--report", repair.report,
                         "Write the JSON report ('-' for stdout)");
  repair_cmd->add_option("--write-patched", repair.write_patched,
                         "Write the patched program");

  std::string run_program, run_tests;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a test suite");
  run_cmd->add_option("program", run_program)->required()->check(CLI::ExistingFile);
  run_cmd->add_option("tests", run_tests)->required()->check(CLI::ExistingFile);

  std::string corpus_dir = MINIPOL_DEFAULT_CORPUS_DIR;
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "Repair every corpus case and compare with "
                                   "its expected outcome");
  corpus_cmd->add_option("--dir", corpus_dir, "Corpus root")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*repair_cmd) return RunRepair(repair);
    if (*run_cmd) return RunTests(run_program, run_tests);
    return RunCorpus(corpus_dir);
  } catch (const InputError& e) {
    std::cerr << "minipol: " << e.what() << "\n";
    return kInputError;
  }
}
