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

#ifndef MINIPOL_REPORT_H_
#define MINIPOL_REPORT_H_

#include <string>
#include <vector>

#include "minipol/repair.h"
#include "minipol/trace.h"

namespace minipol {

// Machine-readable outcome. Holds only deterministic fields, so two runs on
// the same input produce identical reports.
std::string ReportToJson(const RepairResult& result, const std::string& file);

// "Fix found!" with the replaced and replacing code, or the reason no
// patch was produced.
std::string FormatHumanReport(const RepairResult& result,
                              const std::string& file);

// One object per repair site: schema, constants and rows.
std::string TracesToJson(const std::vector<SynthesisInput>& traces);

}  // namespace minipol

#endif  // MINIPOL_REPORT_H_
