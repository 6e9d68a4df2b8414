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

#ifndef MINIPOL_PARSER_H_
#define MINIPOL_PARSER_H_

#include <string>
#include <string_view>

#include "minipol/ast.h"
#include "minipol/value.h"

namespace minipol {

// Parses a whole `.mini` source. Node ids are assigned in preorder.
// Throws ParseError (with line/col) on malformed input, an empty program
// ("no functions") or a duplicate function name.
Program ParseProgram(std::string_view source,
                     const std::string& file = "<input>");

// Parses a standalone expression, numbered from 0.
ExprPtr ParseExpression(std::string_view text);

// Parses a literal of the given type, as used in test-suite files. `[]` takes
// its element type from `expected`. Throws InputError on mismatch.
Value ParseValue(std::string_view text, Type expected);

}  // namespace minipol

#endif  // MINIPOL_PARSER_H_
