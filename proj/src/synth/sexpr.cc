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

#include "minipol/synth/sexpr.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace minipol {

SExpr SExpr::Atom(std::string text) {
  SExpr e;
  e.atom = std::move(text);
  return e;
}

SExpr SExpr::List(std::vector<SExpr> items) {
  SExpr e;
  e.is_list = true;
  e.items = std::move(items);
  return e;
}

SExpr SExpr::Int(int64_t value) {
  if (value >= 0) return Atom(std::to_string(value));
  // Negate as unsigned so INT64_MIN stays representable.
  uint64_t magnitude = 0 - static_cast<uint64_t>(value);
  return List({Atom("-"), Atom(std::to_string(magnitude))});
}

SExpr SExpr::Real(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("non-finite real has no SMT-LIB encoding");
  }
  if (std::signbit(value) && value != 0.0) {
    return List({Atom("-"), Atom(ExactDecimal(-value))});
  }
  return Atom(ExactDecimal(std::fabs(value)));
}

std::string_view SExpr::Head() const {
  if (!is_list || items.empty() || items[0].is_list) return {};
  return items[0].atom;
}

std::string SExpr::ToString() const {
  if (!is_list) return atom;
  std::string out = "(";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].ToString();
  }
  return out + ")";
}

std::string ExactDecimal(double value) {
  // Every double is a dyadic rational, so its decimal expansion terminates
  // within 1074 fractional digits.
  char buffer[1500];
  std::snprintf(buffer, sizeof buffer, "%.1074f", value);
  std::string s = buffer;
  size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;  // keep one fractional digit
  s.erase(last + 1);
  return s;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> out;
    for (SkipSpace(); pos_ < text_.size(); SkipSpace()) {
      out.push_back(Read());
    }
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw SExprError("s-expression at offset " + std::to_string(pos_) + ": " +
                     message);
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr Read() {
    char c = text_[pos_];
    if (c == ')') Fail("unexpected ')'");
    if (c == '(') {
      ++pos_;
      std::vector<SExpr> items;
      for (SkipSpace(); pos_ < text_.size() && text_[pos_] != ')';
           SkipSpace()) {
        items.push_back(Read());
      }
      if (pos_ >= text_.size()) Fail("unterminated list");
      ++pos_;
      return SExpr::List(std::move(items));
    }
    if (c == '|' || c == '"') {
      size_t end = text_.find(c, pos_ + 1);
      if (end == std::string_view::npos) Fail("unterminated quoted atom");
      SExpr atom = SExpr::Atom(std::string(text_.substr(pos_, end + 1 - pos_)));
      pos_ = end + 1;
      return atom;
    }
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' ||
          std::isspace(static_cast<unsigned char>(d))) {
        break;
      }
      ++pos_;
    }
    return SExpr::Atom(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<SExpr> ParseSExprs(std::string_view text) {
  return Reader(text).ReadAll();
}

}  // namespace minipol
