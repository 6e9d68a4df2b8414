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

#ifndef MINIPOL_CORPUS_H_
#define MINIPOL_CORPUS_H_

#include <string>
#include <vector>

#include "minipol/repair.h"

namespace minipol {

// A corpus case is a directory holding program.mini, tests.json and
// expected.json. expected.json has an optional "options" object (mode,
// constants, max_level) and an "expect" object whose fields (status,
// reason, patch_kind, line, expression, level) must match the outcome.
struct CorpusOutcome {
  std::string name;
  std::string program_path;
  RepairResult result;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Case directories under `root`, sorted by name.
std::vector<std::string> ListCorpusCases(const std::string& root);

// Throws InputError for unreadable or malformed case files.
CorpusOutcome RunCorpusCase(const std::string& case_dir);

RepairMode ParseRepairMode(const std::string& text);
ConstantStrategy ParseConstantStrategy(const std::string& text);

}  // namespace minipol

#endif  // MINIPOL_CORPUS_H_
