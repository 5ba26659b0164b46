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

#include "qwalk/special_states.h"

#include <numbers>
#include <set>

#include "gtest/gtest.h"
#include "qwalk/errors.h"
#include "qwalk/revival.h"
#include "qwalk/spectral.h"
#include "test_util.h"

using namespace qwalk;

namespace {

const double kRhoMinus = (5 - std::sqrt(5.0)) / 8;

const EigenEntry& find(const EigenBasis& b, int block, int branch) {
    for (const auto& e : b.entries)
        if (e.block == block && e.branch == branch) return e;
    throw std::logic_error("missing entry");
}

}  // namespace

TEST(eigenbasis, residual_and_rank_random) {
    auto gen = qwalk_test::rng(40);
    std::uniform_real_distribution<double> u01(0, 1), ud(0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + trial % 9;
        CoinParams p = CoinParams::from_delta(u01(gen), ud(gen));
        EigenBasis b = eigenbasis(k, p);
        ASSERT_EQ(b.entries.size(), static_cast<std::size_t>(2 * k));
        Matrix u = qwalk_test::oracle_walk(k, p.rho(), p.delta(), 0);
        for (const auto& e : b.entries) {
            EXPECT_LT((u * e.vector - e.value * e.vector).cwiseAbs().maxCoeff(), 1e-10);
            EXPECT_NEAR(e.vector.norm(), 1, 1e-12);
        }
        EXPECT_EQ(basis_rank(b), 2 * k);
    }
}

TEST(eigenbasis, rho_one_vectors_live_on_one_coin) {
    EigenBasis b = eigenbasis(5, CoinParams::from_delta(1.0, 0.0));
    for (const auto& e : b.entries) {
        double up = 0, down = 0;
        for (int i = 0; i < 5; ++i) {
            up += std::norm(e.vector(basis_index(i, 0)));
            down += std::norm(e.vector(basis_index(i, 1)));
        }
        EXPECT_LT(std::min(up, down), 1e-20);
    }
}

TEST(eigenbasis, degenerate_block_is_flagged_and_orthonormal) {
    // k = 4, rho = 1, delta = 0: block 1 carries -i twice, block 3 carries i twice.
    EigenBasis b = eigenbasis(4, CoinParams::from_delta(1.0, 0.0));
    std::vector<const EigenEntry*> deg;
    for (const auto& e : b.entries) {
        if (e.degenerate) deg.push_back(&e);
    }
    ASSERT_EQ(deg.size(), 4u);
    for (int pair = 0; pair < 2; ++pair) {
        const EigenEntry &a = *deg[2 * pair], &c = *deg[2 * pair + 1];
        EXPECT_EQ(a.block, 1 + 2 * pair);
        EXPECT_EQ(c.block, a.block);
        EXPECT_LT(std::abs(a.vector.dot(c.vector)), 1e-12);
        EXPECT_NE(a.branch, c.branch);
    }
    EXPECT_EQ(basis_rank(b), 8);
}

TEST(eigenbasis, k4_fifth_root_phases) {
    EigenBasis b = eigenbasis(4, CoinParams::from_delta(kRhoMinus, 0.0));
    const double pi = std::numbers::pi;
    EXPECT_LT(std::abs(find(b, 1, 1).value - std::polar(1.0, -pi / 5)), 1e-10);
    EXPECT_LT(std::abs(find(b, 1, -1).value - std::polar(1.0, -4 * pi / 5)), 1e-10);
    EXPECT_LT(std::abs(find(b, 3, 1).value - std::polar(1.0, 4 * pi / 5)), 1e-10);
    EXPECT_LT(std::abs(find(b, 3, -1).value - std::polar(1.0, pi / 5)), 1e-10);
}

TEST(demoivre_subspace, k4_period5_picks_four_entries) {
    EigenBasis b = eigenbasis(4, CoinParams::from_delta(kRhoMinus, 0.0));
    auto sub = demoivre_subspace(b, 5);
    ASSERT_TRUE(sub);
    std::set<std::pair<int, int>> got;
    for (const auto& e : *sub) got.insert({e.block, e.branch});
    EXPECT_EQ(got, (std::set<std::pair<int, int>>{{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
    EXPECT_THROW(demoivre_subspace(b, 0), std::invalid_argument);
}

TEST(demoivre_subspace, full_revival_takes_everything) {
    EigenBasis b = eigenbasis(3, CoinParams::from_delta(2.0 / 3.0, 0.0));
    auto sub = demoivre_subspace(b, 8);
    ASSERT_TRUE(sub);
    EXPECT_EQ(sub->size(), 6u);
}

TEST(demoivre_subspace, generic_parameters_have_no_fixed_vectors) {
    auto gen = qwalk_test::rng(41);
    std::uniform_real_distribution<double> u01(0.01, 0.99), ud(0.01, 2 * std::numbers::pi - 0.01);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + trial % 7;
        EXPECT_FALSE(demoivre_subspace(eigenbasis(k, CoinParams::from_delta(u01(gen), ud(gen))), 1));
    }
}

TEST(build_special_state, two_vector_state_has_period_five) {
    CoinParams p = CoinParams::from_delta(kRhoMinus, 0.0);
    EigenBasis b = eigenbasis(4, p);
    std::vector<EigenEntry> pick{find(b, 1, -1), find(b, 3, 1)};
    WalkerState psi = build_special_state(pick, {Complex(1), Complex(1)});
    EXPECT_NEAR(psi.norm_squared(), 1, 1e-14);

    Matrix u = qwalk_test::oracle_walk(4, kRhoMinus, 0, 0);
    Vector v5 = qwalk_test::oracle_power(u, 5) * psi.amplitudes();
    Vector v4 = qwalk_test::oracle_power(u, 4) * psi.amplitudes();
    EXPECT_LT((v5 - psi.amplitudes()).norm(), 1e-9);
    EXPECT_GT((v4 - psi.amplitudes()).norm(), 0.1);
    EXPECT_GT(revival_deviation(4, p, 5), 0.5);

    auto fid = fidelity_scan(psi, build_walk_operator(4, p), 5);
    ASSERT_EQ(fid.size(), 6u);
    EXPECT_NEAR(fid[0], 1, 1e-12);
    EXPECT_GT(fid[5], 1 - 1e-9);
    for (int t = 1; t < 5; ++t) EXPECT_LT(fid[t], 0.99);
}

TEST(build_special_state, single_eigenvector_period_is_phase_denominator) {
    CoinParams p = CoinParams::from_delta(kRhoMinus, 0.0);
    EigenBasis b = eigenbasis(4, p);
    WalkOperator op = build_walk_operator(4, p);
    for (const auto& e : b.entries) {
        auto f = reconstruct_fraction(principal_phase(e.value), 100, 1e-9);
        ASSERT_TRUE(f);
        auto fid = fidelity_scan(build_special_state({e}, {Complex(0, 2)}), op, f->den());
        EXPECT_NEAR(fid.back(), 1, 1e-12);
        Vector moved = evolve_direct(build_special_state({e}, {1}), op, f->den()).amplitudes();
        EXPECT_LT((moved - e.vector).norm(), 1e-9);
        for (std::int64_t t = 1; t < f->den(); ++t) {
            Vector w = evolve_direct(build_special_state({e}, {1}), op, t).amplitudes();
            EXPECT_GT((w - e.vector).norm(), 1e-6);
        }
    }
}

TEST(build_special_state, errors) {
    EigenBasis b = eigenbasis(3, CoinParams::hadamard());
    EXPECT_THROW(build_special_state({}, {}), std::invalid_argument);
    EXPECT_THROW(build_special_state({b.entries[0]}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(build_special_state({b.entries[0], b.entries[0]}, {1, -1}), std::invalid_argument);
}
