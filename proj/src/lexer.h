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

#ifndef MINIPOL_SRC_LEXER_H_
#define MINIPOL_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "minipol/ast.h"

namespace minipol {

enum class TokenKind {
  kIdent,
  kInt,
  kReal,
  kKeyword,  // fn let if else while return true false
  kPunct,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  SourcePos end;
};

// Throws ParseError on characters outside the grammar.
std::vector<Token> Tokenize(std::string_view source, const std::string& file);

}  // namespace minipol

#endif  // MINIPOL_SRC_LEXER_H_
