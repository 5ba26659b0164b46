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

#include "qwalk/tables.h"

#include <numbers>

#include "gtest/gtest.h"
#include "qwalk/expr.h"
#include "qwalk/spectral.h"
#include "test_util.h"

using namespace qwalk;
using F = ReducedFraction;

TEST(tables, every_table_verifies) {
    for (int id = 1; id <= 5; ++id) {
        TableReport r = verify_table(id);
        EXPECT_TRUE(r.all_pass()) << "table " << id << " max " << r.max_deviation();
        EXPECT_LT(r.max_deviation(), 1e-9);
    }
    EXPECT_THROW(table_rows(6), std::invalid_argument);
    EXPECT_THROW(verify_table(0), std::invalid_argument);
}

TEST(tables, check_counts) {
    // 6 k x 3 u/v x {rho = 0, 1}; k = 3 and 6 doubled; 4; 10 + 4 two-form rows.
    EXPECT_EQ(verify_table(1).checks.size(), 36u);
    EXPECT_EQ(verify_table(2).checks.size(), 7u);
    EXPECT_EQ(verify_table(3).checks.size(), 82u);
    EXPECT_EQ(verify_table(4).checks.size(), 67u);
    EXPECT_EQ(verify_table(5).checks.size(), 24u);
}

TEST(tables, tolerance_is_applied) {
    TableReport r = verify_table(4, 1e-30);
    EXPECT_FALSE(r.all_pass());
    EXPECT_EQ(r.tolerance, 1e-30);
}

namespace {

double oracle(int k, const std::string& rho, F delta, std::int64_t n) {
    return qwalk_test::deviation_from_identity(qwalk_test::oracle_power(
        qwalk_test::oracle_walk(k, evaluate_expression(rho), delta.radians(), 0), n));
}

}  // namespace

TEST(tables, spot_rows_against_oracle) {
    EXPECT_LT(oracle(4, "1/2", F(1, 4), 24), 1e-9);
    EXPECT_LT(oracle(3, "(5-sqrt5)/6", F(1, 3), 30), 1e-9);
    EXPECT_LT(oracle(6, "(5-sqrt5)/6", F(1, 3), 30), 1e-9);
    EXPECT_LT(oracle(5, "(5+sqrt5)/10", F(4, 5), 60), 1e-9);
    EXPECT_LT(oracle(10, "(5+sqrt5)/10", F(4, 5), 60), 1e-9);
    // Control: a listed rho at the wrong period does not revive.
    EXPECT_GT(oracle(4, "1/2", F(1, 4), 12), 0.1);
}

TEST(tables, two_form_rows_are_generator_sets) {
    for (const TableRow& row : table_rows(5)) {
        std::vector<F> all = row.primed;
        all.insert(all.end(), row.double_primed.begin(), row.double_primed.end());
        EXPECT_EQ(lcm_denominators(all), row.n);
    }
}

TEST(tables, special_state_columns_match_spectrum) {
    for (const SpecialColumn& col : special_state_columns()) {
        CoinParams p = CoinParams::from_delta(evaluate_expression(col.rho_expr), 0.0);
        BranchEigenvalues b1 = eigenvalue_branches(4, 1, p), b3 = eigenvalue_branches(4, 3, p);
        EXPECT_LT(qwalk_test::angle_gap(b1.plus, col.l1_plus.value()), 1e-10) << col.mn.to_string();
        EXPECT_LT(qwalk_test::angle_gap(b1.minus, col.l1_minus.value()), 1e-10);
        EXPECT_LT(qwalk_test::angle_gap(b3.plus, col.l3_plus.value()), 1e-10);
        EXPECT_LT(qwalk_test::angle_gap(b3.minus, col.l3_minus.value()), 1e-10);
        // rho_1 = rho_3 evaluated at the column fraction.
        EXPECT_NEAR(*rho_for(4, 1, col.mn, 0.0), p.rho(), 1e-12);
        EXPECT_NEAR(*rho_for(4, 3, col.mn, 0.0), p.rho(), 1e-12);
    }
}
