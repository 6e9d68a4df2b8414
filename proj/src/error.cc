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

#include "minipol/error.h"

namespace minipol {

std::string Diagnostic::ToString() const {
  std::string out = loc.file.empty() ? "<input>" : loc.file;
  out += ":" + std::to_string(loc.line) + ":" + std::to_string(loc.col) +
         ": " + message;
  return out;
}

ParseError::ParseError(Diagnostic diagnostic)
    : InputError("syntax error: " + diagnostic.ToString()),
      diagnostic_(std::move(diagnostic)) {}

namespace {

std::string JoinDiagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "type error";
  if (diagnostics.size() > 1) out += "s";
  out += ":";
  for (const auto& d : diagnostics) out += "\n  " + d.ToString();
  return out;
}

}  // namespace

TypeErrors::TypeErrors(std::vector<Diagnostic> diagnostics)
    : InputError(JoinDiagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace minipol
