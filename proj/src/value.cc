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

#include "minipol/value.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace minipol {

std::string TypeName(Type type) {
  switch (type) {
    case Type::kBool:
      return "bool";
    case Type::kInt:
      return "int";
    case Type::kReal:
      return "real";
    case Type::kIntArray:
      return "array<int>";
    case Type::kRealArray:
      return "array<real>";
  }
  return "?";
}

bool IsNumeric(Type type) { return type == Type::kInt || type == Type::kReal; }

bool IsArray(Type type) {
  return type == Type::kIntArray || type == Type::kRealArray;
}

Type ElementType(Type array_type) {
  if (array_type == Type::kIntArray) return Type::kInt;
  if (array_type == Type::kRealArray) return Type::kReal;
  throw std::logic_error("ElementType of non-array type " +
                         TypeName(array_type));
}

Type ArrayOf(Type element_type) {
  if (element_type == Type::kInt) return Type::kIntArray;
  if (element_type == Type::kReal) return Type::kRealArray;
  throw std::logic_error("no array type over " + TypeName(element_type));
}

Value Value::EmptyArray(Type array_type) {
  if (array_type == Type::kIntArray) return IntArray({});
  if (array_type == Type::kRealArray) return RealArray({});
  throw std::logic_error("EmptyArray of non-array type");
}

Type Value::type() const {
  switch (data_.index()) {
    case 0:
      return Type::kBool;
    case 1:
      return Type::kInt;
    case 2:
      return Type::kReal;
    case 3:
      return Type::kIntArray;
    default:
      return Type::kRealArray;
  }
}

int64_t Value::ArrayLength() const {
  if (const auto* a = std::get_if<std::vector<int64_t>>(&data_)) {
    return static_cast<int64_t>(a->size());
  }
  return static_cast<int64_t>(std::get<std::vector<double>>(data_).size());
}

namespace {

bool RealsMatch(double expected, double actual, double tolerance) {
  if (std::isnan(expected) || std::isnan(actual)) {
    return std::isnan(expected) && std::isnan(actual);
  }
  if (std::isinf(expected) || std::isinf(actual)) return expected == actual;
  return std::fabs(expected - actual) <= tolerance;
}

}  // namespace

bool ValuesMatch(const Value& expected, const Value& actual,
                 double real_tolerance) {
  if (expected.type() != actual.type()) return false;
  switch (expected.type()) {
    case Type::kReal:
      return RealsMatch(expected.AsReal(), actual.AsReal(), real_tolerance);
    case Type::kRealArray: {
      const auto& e = expected.AsRealArray();
      const auto& a = actual.AsRealArray();
      if (e.size() != a.size()) return false;
      for (size_t i = 0; i < e.size(); ++i) {
        if (!RealsMatch(e[i], a[i], real_tolerance)) return false;
      }
      return true;
    }
    default:
      return expected == actual;
  }
}

std::string FormatReal(double d) {
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string text(buf, end);
  // Shortest form may lack a dot ("3", "1e+20"); a dot marks REAL.
  if (text.find_first_of(".") == std::string::npos) {
    auto e = text.find_first_of("eE");
    if (e == std::string::npos) {
      text += ".0";
    } else {
      text.insert(e, ".0");
    }
  }
  return text;
}

std::string ToLiteral(const Value& value) {
  switch (value.type()) {
    case Type::kBool:
      return value.AsBool() ? "true" : "false";
    case Type::kInt:
      return std::to_string(value.AsInt());
    case Type::kReal:
      return FormatReal(value.AsReal());
    case Type::kIntArray: {
      std::string out = "[";
      const auto& a = value.AsIntArray();
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(a[i]);
      }
      return out + "]";
    }
    case Type::kRealArray: {
      std::string out = "[";
      const auto& a = value.AsRealArray();
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += FormatReal(a[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

}  // namespace minipol
