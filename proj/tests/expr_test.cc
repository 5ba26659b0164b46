// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/expr.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using qwalk::evaluate_expression;

TEST(expr, arithmetic_and_precedence) {
    EXPECT_DOUBLE_EQ(evaluate_expression("2/3"), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(evaluate_expression("1 + 2 * 3"), 7);
    EXPECT_DOUBLE_EQ(evaluate_expression("(1+2)*3"), 9);
    EXPECT_DOUBLE_EQ(evaluate_expression("-2^2"), -4);
    EXPECT_DOUBLE_EQ(evaluate_expression("2^3^2"), 512);
    EXPECT_DOUBLE_EQ(evaluate_expression("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(evaluate_expression("1e-3"), 1e-3);
}

TEST(expr, surds_and_trig) {
    EXPECT_DOUBLE_EQ(evaluate_expression("(5-sqrt5)/8"), (5 - std::sqrt(5.0)) / 8);
    EXPECT_DOUBLE_EQ(evaluate_expression("(5-sqrt(5))/8"), (5 - std::sqrt(5.0)) / 8);
    EXPECT_DOUBLE_EQ(evaluate_expression("2/3*(1-sin(7*pi/30))"),
                     2.0 / 3.0 * (1 - std::sin(7 * std::numbers::pi / 30)));
    EXPECT_DOUBLE_EQ(evaluate_expression("(4-sqrt(10+2*sqrt5))/4"),
                     (4 - std::sqrt(10 + 2 * std::sqrt(5.0))) / 4);
    EXPECT_DOUBLE_EQ(evaluate_expression("cos(pi)"), -1);
}

TEST(expr, errors) {
    for (const char* bad : {"", "1+", "(1", "1)", "sqrt(-1)", "foo", "2 3", "1/0", "sin 1"}) {
        EXPECT_THROW(evaluate_expression(bad), std::invalid_argument) << bad;
    }
}
