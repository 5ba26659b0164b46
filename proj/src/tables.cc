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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qwalk/expr.h"

namespace qwalk {

namespace {

using F = ReducedFraction;

std::vector<F> fracs(std::initializer_list<std::pair<std::int64_t, std::int64_t>> v) {
    std::vector<F> out;
    for (auto [m, n] : v) out.emplace_back(m, n);
    return out;
}

std::vector<TableRow> edge_rows() {
    std::vector<TableRow> rows;
    for (int k : {2, 3, 4, 5, 7, 12}) {
        for (F uv : {F(1, 2), F(1, 3), F(2, 5)}) {
            rows.push_back({2 * uv.den(), {"0"}, {uv}, {k}, {}, {}});
            const std::int64_t extra[] = {2, k, uv.den() * k};
            rows.push_back({lcm_denominators({}, extra), {"1"}, {uv}, {k}, {}, {}});
        }
    }
    return rows;
}

std::vector<TableRow> k2_rows() {
    return {
        {2, {"0", "0.25", "0.37", "1/2", "(5-sqrt5)/8", "1"}, {F(0, 1)}, {2}, {}, {}},
        {30, {"2/3*(1-sin(7*pi/30))"}, {F(2, 3)}, {2}, {}, {}},
    };
}

std::vector<TableRow> k3_rows() {
    const std::vector<F> all = fracs({{0, 1}, {1, 3}, {2, 3}});
    const std::vector<F> zero = fracs({{0, 1}});
    const std::vector<F> thirds = fracs({{1, 3}, {2, 3}});
    const std::vector<int> ks{3, 6};
    return {
        {8, {"2/3"}, zero, ks, {}, {}},
        {10, {"(5-sqrt5)/6"}, zero, ks, {}, {}},
        {12, {"1/3"}, all, ks, {}, {}},
        {14, {"2/3*(1-cos(2*pi*1/7))", "2/3*(1-cos(2*pi*2/7))"}, zero, ks, {}, {}},
        {16, {"(2-sqrt(2))/3"}, zero, ks, {}, {}},
        {18, {"2/3*(1-cos(2*pi*1/9))", "2/3*(1-cos(2*pi*2/9))"}, all, ks, {}, {}},
        {20, {"(3-sqrt5)/6", "(3+sqrt5)/6"}, zero, ks, {}, {}},
        {22,
         {"2/3*(1-cos(2*pi*1/11))", "2/3*(1-cos(2*pi*2/11))", "2/3*(1-cos(2*pi*3/11))"},
         zero, ks, {}, {}},
        {24, {"(2-sqrt(3))/3"}, all, ks, {}, {}},
        {24, {"2/3"}, thirds, ks, {}, {}},
        {26,
         {"2/3*(1-cos(2*pi*1/13))", "2/3*(1-cos(2*pi*2/13))", "2/3*(1-cos(2*pi*3/13))",
          "2/3*(1-cos(2*pi*4/13))"},
         zero, ks, {}, {}},
        {28, {"2/3*(1-cos(2*pi*1/14))", "2/3*(1-cos(2*pi*3/14))"}, zero, ks, {}, {}},
        {30,
         {"(7-sqrt5-sqrt(6*(5-sqrt5)))/12", "(7+sqrt5-sqrt(6*(5+sqrt5)))/12",
          "(7-sqrt5+sqrt(6*(5-sqrt5)))/12"},
         all, ks, {}, {}},
        {30, {"(5-sqrt5)/6"}, thirds, ks, {}, {}},
    };
}

std::vector<TableRow> k4_rows() {
    const std::vector<F> zero = fracs({{0, 1}});
    const std::vector<F> zero_pi = fracs({{0, 1}, {1, 2}});
    const std::vector<F> pi = fracs({{1, 2}});
    const std::vector<F> quarter = fracs({{1, 4}, {3, 4}});
    const std::vector<int> ks{4};
    return {
        {6, {"3/4"}, zero, ks, {}, {}},
        {8, {"1/2"}, zero_pi, ks, {}, {}},
        {10, {"(5-sqrt5)/8", "(5+sqrt5)/8"}, zero, ks, {}, {}},
        {12, {"1/4"}, zero_pi, ks, {}, {}},
        {12, {"3/4"}, pi, ks, {}, {}},
        {12, {"(2-sqrt(3))/2"}, quarter, ks, {}, {}},
        {14, {"1/2*(1-sin(3*pi/14))", "1/2*(1+sin(pi/14))", "1/2*(1+cos(pi/7))"}, zero, ks, {}, {}},
        {16, {"(2-sqrt(2))/4", "(2+sqrt(2))/4"}, zero_pi, ks, {}, {}},
        {16, {"(2-sqrt(2))/2"}, quarter, ks, {}, {}},
        {18, {"1/2*(1-cos(2*pi/9))", "1/2*(1-sin(pi/18))"}, zero, ks, {}, {}},
        {20, {"(3-sqrt5)/8", "(3+sqrt5)/8"}, zero_pi, ks, {}, {}},
        {20, {"(5-sqrt5)/8", "(5+sqrt5)/8"}, pi, ks, {}, {}},
        {20, {"(4-sqrt(10+2*sqrt5))/4", "(4-sqrt(10-2*sqrt5))/4"}, quarter, ks, {}, {}},
        {22,
         {"1/2*(1-cos(2*pi/11))", "1/2*(1-sin(3*pi/22))", "1/2*(1+sin(pi/22))",
          "1/2*(1+sin(5*pi/22))", "1/2*(1+cos(pi/11))"},
         zero, ks, {}, {}},
        {24, {"(2-sqrt(3))/4", "(2+sqrt(3))/4"}, zero_pi, ks, {}, {}},
        {24, {"1/2"}, quarter, ks, {}, {}},
        {26,
         {"1/2*(1-cos(2*pi/13))", "1/2*(1-sin(5*pi/26))", "1/2*(1-sin(pi/26))",
          "1/2*(1+sin(3*pi/26))", "1/2*(1+cos(3*pi/13))", "1/2*(1+cos(pi/13))"},
         zero, ks, {}, {}},
        {28, {"1/2*(1-cos(pi/7))", "1/2*(1-sin(pi/14))", "1/2*(1+sin(3*pi/14))"}, zero_pi, ks, {}, {}},
        {28, {"1/2*(1+cos(pi/7))", "1/2*(1+sin(pi/14))", "1/2*(1-sin(3*pi/14))"}, pi, ks, {}, {}},
        {28, {"1-sin(pi/7)", "1-cos(pi/14)", "1-cos(3*pi/14)"}, quarter, ks, {}, {}},
        {30,
         {"(7-sqrt5-sqrt(6*(5-sqrt5)))/16", "(7+sqrt5-sqrt(6*(5+sqrt5)))/16",
          "(7-sqrt5+sqrt(6*(5-sqrt5)))/16", "(7+sqrt5+sqrt(6*(5+sqrt5)))/16"},
         zero, ks, {}, {}},
    };
}

std::vector<TableRow> two_form_rows() {
    const std::vector<int> k510{5, 10};
    const std::vector<F> s12 = fracs({{1, 12}, {5, 12}, {7, 12}, {11, 12}});
    const std::vector<F> a1 = fracs({{1, 60}, {11, 60}, {31, 60}, {41, 60}});
    const std::vector<F> a2 = fracs({{7, 60}, {17, 60}, {37, 60}, {47, 60}});
    const std::vector<F> a3 = fracs({{13, 60}, {23, 60}, {43, 60}, {53, 60}});
    const std::vector<F> a4 = fracs({{19, 60}, {29, 60}, {49, 60}, {59, 60}});
    const char* minus = "(5-sqrt5)/10";
    const char* plus = "(5+sqrt5)/10";
    std::vector<TableRow> rows{
        {60, {minus}, {F(0, 1)}, k510, s12, fracs({{1, 20}, {9, 20}, {11, 20}, {19, 20}})},
        {60, {minus}, {F(1, 5)}, k510, a1, fracs({{1, 20}, {3, 20}, {11, 20}, {13, 20}})},
        {60, {minus}, {F(2, 5)}, k510, a2, fracs({{3, 20}, {1, 4}, {13, 20}, {3, 4}})},
        {60, {minus}, {F(3, 5)}, k510, a3, fracs({{1, 4}, {7, 20}, {3, 4}, {17, 20}})},
        {60, {minus}, {F(4, 5)}, k510, a4, fracs({{7, 20}, {9, 20}, {17, 20}, {19, 20}})},
        {60, {plus}, {F(0, 1)}, k510, fracs({{3, 20}, {7, 20}, {13, 20}, {17, 20}}), s12},
        {60, {plus}, {F(1, 5)}, k510, fracs({{1, 4}, {9, 20}, {3, 4}, {19, 20}}), a1},
        {60, {plus}, {F(2, 5)}, k510, fracs({{1, 20}, {7, 20}, {11, 20}, {17, 20}}), a2},
        {60, {plus}, {F(3, 5)}, k510, fracs({{3, 20}, {9, 20}, {13, 20}, {19, 20}}), a3},
        {60, {plus}, {F(4, 5)}, k510, fracs({{1, 20}, {1, 4}, {11, 20}, {3, 4}}), a4},
    };
    const std::vector<F> eighths = fracs({{1, 8}, {3, 8}, {5, 8}, {7, 8}});
    const std::vector<F> quarters = fracs({{1, 4}, {1, 2}, {3, 4}});
    rows.push_back({24, {"1/2"}, {F(0, 1)}, {8}, s12, eighths});
    rows.push_back({24, {"1/2"}, {F(1, 4)}, {8}, fracs({{1, 24}, {5, 24}, {13, 24}, {17, 24}}), quarters});
    rows.push_back({24, {"1/2"}, {F(1, 2)}, {8}, fracs({{1, 6}, {1, 3}, {2, 3}, {5, 6}}), eighths});
    rows.push_back({24, {"1/2"}, {F(3, 4)}, {8}, fracs({{7, 24}, {11, 24}, {19, 24}, {23, 24}}), quarters});
    return rows;
}

}  // namespace

std::vector<TableRow> table_rows(int table_id) {
    switch (table_id) {
        case 1: return edge_rows();
        case 2: return k2_rows();
        case 3: return k3_rows();
        case 4: return k4_rows();
        case 5: return two_form_rows();
    }
    throw std::invalid_argument("no table " + std::to_string(table_id) + "; expected 1..5");
}

bool TableReport::all_pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.pass; });
}

double TableReport::max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
}

TableReport verify_table(int table_id, double tol) {
    TableReport report;
    report.table_id = table_id;
    report.tolerance = tol;
    for (const TableRow& row : table_rows(table_id)) {
        for (const std::string& expr : row.rho_exprs) {
            const double rho = evaluate_expression(expr);
            for (F delta : row.deltas) {
                for (int k : row.ks) {
                    RowCheck c;
                    c.k = k;
                    c.n = row.n;
                    c.rho_expr = expr;
                    c.rho = rho;
                    c.delta_turns = delta;
                    c.deviation = revival_deviation(k, CoinParams::from_delta(rho, delta), row.n);
                    c.pass = c.deviation < tol;
                    report.checks.push_back(std::move(c));
                }
            }
        }
    }
    return report;
}

std::vector<SpecialColumn> special_state_columns() {
    const char* plus = "(5+sqrt5)/8";
    const char* minus = "(5-sqrt5)/8";
    return {
        {F(1, 5), plus, F(4, 5), F(7, 10), F(3, 10), F(1, 5)},
        {F(2, 5), minus, F(9, 10), F(3, 5), F(2, 5), F(1, 10)},
        {F(3, 5), minus, F(9, 10), F(3, 5), F(2, 5), F(1, 10)},
        {F(4, 5), plus, F(4, 5), F(7, 10), F(3, 10), F(1, 5)},
    };
}

}  // namespace qwalk
