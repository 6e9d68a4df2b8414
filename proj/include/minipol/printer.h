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

#ifndef MINIPOL_PRINTER_H_
#define MINIPOL_PRINTER_H_

#include <string>

#include "minipol/ast.h"

namespace minipol {

// Deterministic rendering with the fewest parentheses that re-parse to the
// same tree.
std::string PrettyPrint(const Expr& expr);
std::string PrettyPrint(const Stmt& stmt, int indent = 0);
std::string PrettyPrint(const Program& program);

}  // namespace minipol

#endif  // MINIPOL_PRINTER_H_
