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

#include "lexer.h"

#include <cctype>
#include <set>

#include "minipol/error.h"

namespace minipol {

namespace {

const std::set<std::string>& Keywords() {
  static const std::set<std::string> kKeywords = {
      "fn", "let", "if", "else", "while", "return", "true", "false"};
  return kKeywords;
}

// Longest match first.
const char* const kPunctuation[] = {"->", "&&", "||", "<=", ">=", "==", "!=",
                                    "(",  ")",  "{",  "}",  "[",  "]",  ",",
                                    ";",  ":",  "=",  "<",  ">",  "+",  "-",
                                    "*",  "/",  "!"};

}  // namespace

std::vector<Token> Tokenize(std::string_view source, const std::string& file) {
  std::vector<Token> tokens;
  size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto fail = [&](const std::string& message) {
    throw ParseError(Diagnostic{SourceLoc{file, line, col, -1}, message});
  };

  while (i < source.size()) {
    char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    SourcePos start{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[j])) ||
              source[j] == '_')) {
        ++j;
      }
      std::string text(source.substr(i, j - i));
      advance(j - i);
      TokenKind kind =
          Keywords().count(text) ? TokenKind::kKeyword : TokenKind::kIdent;
      tokens.push_back({kind, std::move(text), start, {line, col}});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
      TokenKind kind = TokenKind::kInt;
      if (j < source.size() && source[j] == '.') {
        if (j + 1 >= source.size() ||
            !std::isdigit(static_cast<unsigned char>(source[j + 1]))) {
          advance(j - i);
          fail("expected digits after '.' in real literal");
        }
        kind = TokenKind::kReal;
        ++j;
        while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
        if (j < source.size() && (source[j] == 'e' || source[j] == 'E')) {
          size_t k = j + 1;
          if (k < source.size() && (source[k] == '+' || source[k] == '-')) ++k;
          if (k < source.size() && std::isdigit(static_cast<unsigned char>(source[k]))) {
            while (k < source.size() && std::isdigit(static_cast<unsigned char>(source[k]))) ++k;
            j = k;
          }
        }
      }
      std::string text(source.substr(i, j - i));
      advance(j - i);
      tokens.push_back({kind, std::move(text), start, {line, col}});
      continue;
    }
    bool matched = false;
    for (const char* p : kPunctuation) {
      std::string_view punct(p);
      if (source.substr(i, punct.size()) == punct) {
        advance(punct.size());
        tokens.push_back(
            {TokenKind::kPunct, std::string(punct), start, {line, col}});
        matched = true;
        break;
      }
    }
    if (!matched) fail(std::string("unexpected character '") + c + "'");
  }
  tokens.push_back({TokenKind::kEnd, "", {line, col}, {line, col}});
  return tokens;
}

}  // namespace minipol
