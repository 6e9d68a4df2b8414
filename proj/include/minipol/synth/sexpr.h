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

#ifndef MINIPOL_SYNTH_SEXPR_H_
#define MINIPOL_SYNTH_SEXPR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minipol {

class SExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;

  static SExpr Atom(std::string text);
  static SExpr List(std::vector<SExpr> items);
  // SMT-LIB numerals: negative values become (- n).
  static SExpr Int(int64_t value);
  // Exact decimal expansion of a finite double. Throws std::invalid_argument
  // for NaN and infinities, which have no SMT-LIB Real counterpart.
  static SExpr Real(double value);

  bool IsAtom(std::string_view text) const {
    return !is_list && atom == text;
  }
  // The head symbol of a list, or "" for atoms and empty lists.
  std::string_view Head() const;

  std::string ToString() const;
};

// Reads every top-level expression. `;` starts a line comment; `|...|`
// symbols and "..." strings are kept verbatim as atoms.
std::vector<SExpr> ParseSExprs(std::string_view text);

// Exact decimal form of a finite, non-negative double with at least one
// fractional digit, e.g. "2.5" or "0.125".
std::string ExactDecimal(double value);

}  // namespace minipol

#endif  // MINIPOL_SYNTH_SEXPR_H_
