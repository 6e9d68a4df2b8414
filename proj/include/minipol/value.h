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

#ifndef MINIPOL_VALUE_H_
#define MINIPOL_VALUE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace minipol {

enum class Type { kBool, kInt, kReal, kIntArray, kRealArray };

std::string TypeName(Type type);
bool IsNumeric(Type type);
bool IsArray(Type type);
// Element type of an array type.
Type ElementType(Type array_type);
Type ArrayOf(Type element_type);

// Runtime value. The active alternative always matches the static type of
// the expression that produced it.
class Value {
 public:
  Value() : data_(false) {}

  static Value Bool(bool b) { return Value(Data(b)); }
  static Value Int(int64_t i) { return Value(Data(i)); }
  static Value Real(double d) { return Value(Data(d)); }
  static Value IntArray(std::vector<int64_t> a) {
    return Value(Data(std::move(a)));
  }
  static Value RealArray(std::vector<double> a) {
    return Value(Data(std::move(a)));
  }
  // Empty array of the given array type.
  static Value EmptyArray(Type array_type);

  Type type() const;

  bool AsBool() const { return std::get<bool>(data_); }
  int64_t AsInt() const { return std::get<int64_t>(data_); }
  double AsReal() const { return std::get<double>(data_); }
  const std::vector<int64_t>& AsIntArray() const {
    return std::get<std::vector<int64_t>>(data_);
  }
  const std::vector<double>& AsRealArray() const {
    return std::get<std::vector<double>>(data_);
  }
  std::vector<int64_t>& MutableIntArray() {
    return std::get<std::vector<int64_t>>(data_);
  }
  std::vector<double>& MutableRealArray() {
    return std::get<std::vector<double>>(data_);
  }

  // Number of elements; only valid for array values.
  int64_t ArrayLength() const;

  // Exact (bitwise for reals, except that 0.0 == -0.0) equality.
  bool operator==(const Value& other) const { return data_ == other.data_; }
  bool operator!=(const Value& other) const { return !(*this == other); }

 private:
  using Data = std::variant<bool, int64_t, double, std::vector<int64_t>,
                            std::vector<double>>;
  explicit Value(Data data) : data_(std::move(data)) {}
  Data data_;
};

// Test-oracle equality: reals (and real array elements) compare within an
// absolute tolerance.
bool ValuesMatch(const Value& expected, const Value& actual,
                 double real_tolerance = 1e-9);

// Renders a value as a mini-lang literal, e.g. `true`, `-3`, `2.5`,
// `[1, 2]`. Reals always carry a dot so the text re-parses as REAL.
std::string ToLiteral(const Value& value);
std::string FormatReal(double d);

}  // namespace minipol

#endif  // MINIPOL_VALUE_H_
