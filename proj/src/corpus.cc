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

#include "minipol/corpus.h"

#include <algorithm>
#include <filesystem>

#include "json.hpp"
#include "minipol/error.h"
#include "minipol/test_suite.h"

namespace minipol {

namespace fs = std::filesystem;

RepairMode ParseRepairMode(const std::string& text) {
  if (text == "condition") return RepairMode::kCondition;
  if (text == "precondition") return RepairMode::kPrecondition;
  if (text == "both") return RepairMode::kBoth;
  throw InputError("unknown repair mode '" + text + "'");
}

ConstantStrategy ParseConstantStrategy(const std::string& text) {
  if (text == "default") return ConstantStrategy::kDefault;
  if (text == "mined") return ConstantStrategy::kMined;
  throw InputError("unknown constant strategy '" + text + "'");
}

std::vector<std::string> ListCorpusCases(const std::string& root) {
  std::vector<std::string> out;
  if (!fs::is_directory(root)) {
    throw InputError("corpus directory '" + root + "' does not exist");
  }
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() &&
        fs::exists(entry.path() / "program.mini")) {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CorpusOutcome RunCorpusCase(const std::string& case_dir) {
  using nlohmann::json;
  const fs::path dir(case_dir);
  CorpusOutcome outcome;
  outcome.name = dir.filename().string();
  outcome.program_path = (dir / "program.mini").string();

  json expected;
  try {
    expected = json::parse(ReadFile((dir / "expected.json").string()));
  } catch (const json::exception& e) {
    throw InputError(outcome.name + "/expected.json: " + e.what());
  }
  RepairOptions options;
  if (expected.contains("options")) {
    const json& o = expected["options"];
    if (o.contains("mode")) options.mode = ParseRepairMode(o["mode"]);
    if (o.contains("constants")) {
      options.constants = ParseConstantStrategy(o["constants"]);
    }
    if (o.contains("max_level")) options.max_level = o["max_level"];
  }

  TypedProgram program = LoadProgram(outcome.program_path);
  auto suite = LoadTestSuite((dir / "tests.json").string(), program);
  outcome.result = Repair(program, suite, options);

  const RepairResult& r = outcome.result;
  const json& want = expected.at("expect");
  auto check = [&](const char* field, const json& actual) {
    if (want.contains(field) && want[field] != actual) {
      outcome.mismatches.push_back(std::string(field) + ": expected " +
                                   want[field].dump() + ", got " +
                                   actual.dump());
    }
  };
  check("status", r.patched() ? "PATCHED" : "NO_PATCH");
  check("reason", r.patched() ? json(nullptr)
                              : json(NoPatchReasonName(r.reason)));
  if (r.patched()) {
    check("patch_kind", r.patch->kind == AngelicPair::Kind::kCondition
                            ? "condition"
                            : "precondition");
    check("line", r.patch->loc.line);
    check("expression", r.patch->expression);
    check("level", r.patch->level);
  }
  return outcome;
}

}  // namespace minipol
