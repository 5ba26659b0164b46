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

#include "qwalk/record.h"

#include "gtest/gtest.h"
#include "json.hpp"

using namespace qwalk;
using F = ReducedFraction;

namespace {

void expect_same(const SolutionRecord& a, const SolutionRecord& b) {
    EXPECT_EQ(a.certificate.k, b.certificate.k);
    EXPECT_EQ(a.certificate.n, b.certificate.n);
    EXPECT_EQ(a.certificate.rho, b.certificate.rho);
    EXPECT_EQ(a.certificate.delta, b.certificate.delta);
    EXPECT_EQ(a.certificate.generators, b.certificate.generators);
    EXPECT_EQ(a.certificate.max_deviation, b.certificate.max_deviation);
    EXPECT_EQ(a.case_tag, b.case_tag);
    EXPECT_EQ(a.delta_turns, b.delta_turns);
    EXPECT_EQ(a.rho_expr, b.rho_expr);
    EXPECT_EQ(a.forms, b.forms);
}

}  // namespace

TEST(record, round_trips_exactly) {
    SolutionRecord r = solve_k2(F(2, 5), F(2, 3));
    r.rho_expr = "2/3*(1-sin(7*pi/30))";
    const std::string line = serialize_record(r);
    expect_same(parse_record(line), r);
    EXPECT_EQ(serialize_record(parse_record(line)), line);
    EXPECT_EQ(line.find('\n'), std::string::npos);
}

TEST(record, two_form_and_radian_delta) {
    SolutionRecord two = solve_two_form(8, F(0, 1)).solutions.at(0);
    expect_same(parse_record(serialize_record(two)), two);

    SolutionRecord approx = *solve_approximate(7, 0.5, 1.2345678901234567, 1e-2);
    SolutionRecord back = parse_record(serialize_record(approx));
    expect_same(back, approx);
    EXPECT_FALSE(back.delta_turns);
}

TEST(record, schema) {
    auto j = nlohmann::json::parse(serialize_record(solve_k3(F(0, 1), F(1, 8))));
    for (const char* key : {"k", "N", "rho", "delta", "generators", "max_deviation", "case_tag"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["N"], 8);
    EXPECT_EQ(j["case_tag"], "k3_family");
    EXPECT_EQ(j["delta"]["two_pi_num"], 0);
    EXPECT_EQ(j["delta"]["two_pi_den"], 1);
    EXPECT_EQ(j["generators"][1]["den"], 8);
    EXPECT_FALSE(j.contains("forms"));
}

TEST(record, malformed_input) {
    EXPECT_THROW(parse_record("{"), std::invalid_argument);
    EXPECT_THROW(parse_record("{\"k\": 3}"), std::invalid_argument);
    std::string line = serialize_record(solve_k3(F(0, 1), F(1, 8)));
    auto j = nlohmann::json::parse(line);
    j["case_tag"] = "nope";
    EXPECT_THROW(parse_record(j.dump()), std::invalid_argument);
}
