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

#include <cmath>
#include <cstring>
#include <limits>

#include <gtest/gtest.h>

#include "minipol/parser.h"

namespace minipol {
namespace {

TEST(ValueTest, TypesAndAccessors) {
  EXPECT_EQ(Value::Bool(true).type(), Type::kBool);
  EXPECT_EQ(Value::Int(-3).AsInt(), -3);
  EXPECT_EQ(Value::Real(2.5).AsReal(), 2.5);
  EXPECT_EQ(Value::IntArray({1, 2, 3}).ArrayLength(), 3);
  EXPECT_EQ(Value::EmptyArray(Type::kRealArray).type(), Type::kRealArray);
  EXPECT_EQ(Value::EmptyArray(Type::kRealArray).ArrayLength(), 0);
}

TEST(ValueTest, TypeNames) {
  EXPECT_EQ(TypeName(Type::kIntArray), "array<int>");
  EXPECT_EQ(TypeName(Type::kReal), "real");
  EXPECT_EQ(ElementType(Type::kRealArray), Type::kReal);
  EXPECT_EQ(ArrayOf(Type::kInt), Type::kIntArray);
  EXPECT_TRUE(IsNumeric(Type::kInt));
  EXPECT_FALSE(IsNumeric(Type::kBool));
}

TEST(ValueTest, RealsMatchWithinAbsoluteTolerance) {
  EXPECT_TRUE(ValuesMatch(Value::Real(1.0), Value::Real(1.0 + 5e-10)));
  EXPECT_FALSE(ValuesMatch(Value::Real(1.0), Value::Real(1.0 + 5e-9)));
  EXPECT_TRUE(ValuesMatch(Value::RealArray({1.0, 2.0}),
                          Value::RealArray({1.0, 2.0 - 1e-12})));
  EXPECT_FALSE(ValuesMatch(Value::RealArray({1.0}),
                           Value::RealArray({1.0, 2.0})));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(ValuesMatch(Value::Real(nan), Value::Real(nan)));
  EXPECT_FALSE(ValuesMatch(Value::Real(nan), Value::Real(0.0)));
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(ValuesMatch(Value::Real(inf), Value::Real(inf)));
  EXPECT_FALSE(ValuesMatch(Value::Real(inf), Value::Real(-inf)));
}

TEST(ValueTest, IntsAndTypesMatchExactly) {
  EXPECT_FALSE(ValuesMatch(Value::Int(1), Value::Int(2)));
  EXPECT_FALSE(ValuesMatch(Value::Int(1), Value::Real(1.0)));
  EXPECT_TRUE(ValuesMatch(Value::IntArray({4, 5}), Value::IntArray({4, 5})));
}

TEST(ValueTest, RealLiteralsAlwaysCarryADot) {
  EXPECT_EQ(FormatReal(3.0), "3.0");
  EXPECT_EQ(FormatReal(0.1), "0.1");
  EXPECT_EQ(FormatReal(-2.5), "-2.5");
  EXPECT_EQ(FormatReal(1e300), "1.0e+300");
  EXPECT_EQ(ToLiteral(Value::RealArray({1.0, 0.5})), "[1.0, 0.5]");
  EXPECT_EQ(ToLiteral(Value::IntArray({})), "[]");
  EXPECT_EQ(ToLiteral(Value::Bool(false)), "false");
}

// Printing then parsing a literal gives back the same value.
TEST(ValueTest, LiteralRoundTripProperty) {
  uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int i = 0; i < 2000; ++i) {
    double d;
    uint64_t bits = next();
    std::memcpy(&d, &bits, sizeof d);
    if (!std::isfinite(d)) continue;
    Value v = Value::Real(d);
    EXPECT_EQ(ParseValue(ToLiteral(v), Type::kReal), v) << ToLiteral(v);
    Value n = Value::Int(static_cast<int64_t>(next()));
    EXPECT_EQ(ParseValue(ToLiteral(n), Type::kInt), n) << ToLiteral(n);
  }
}

}  // namespace
}  // namespace minipol
