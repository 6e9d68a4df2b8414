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

#ifndef MINIPOL_ERROR_H_
#define MINIPOL_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "minipol/ast.h"

namespace minipol {

struct Diagnostic {
  SourceLoc loc;
  std::string message;

  // "file:line:col: message"
  std::string ToString() const;
};

// Malformed input: syntax errors, bad test files, unknown names.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message)
      : std::runtime_error(message) {}
};

class ParseError : public InputError {
 public:
  explicit ParseError(Diagnostic diagnostic);
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

class TypeErrors : public InputError {
 public:
  explicit TypeErrors(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace minipol

#endif  // MINIPOL_ERROR_H_
