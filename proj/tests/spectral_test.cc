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

#include "qwalk/spectral.h"

#include <numbers>

#include "gtest/gtest.h"
#include "qwalk/errors.h"
#include "test_util.h"

using namespace qwalk;
using qwalk_test::max_abs;
using qwalk_test::oracle_walk;

namespace {

// (F^k (x) F^2)_{(a,s),(b,t)} = e^{2 pi i (ab/k + st/2)} / sqrt(2k)
Matrix oracle_fourier(int k) {
    Matrix f(2 * k, 2 * k);
    for (int a = 0; a < k; ++a)
        for (int s = 0; s < 2; ++s)
            for (int b = 0; b < k; ++b)
                for (int t = 0; t < 2; ++t)
                    f(2 * a + s, 2 * b + t) =
                        std::polar(1.0 / std::sqrt(2.0 * k),
                                   qwalk_test::kTwoPi * (double(a * b) / k + 0.5 * s * t));
    return f;
}

struct Draw {
    int k;
    double rho, delta;
};

std::vector<Draw> draws(int count, std::uint64_t seed, int kmax = 12) {
    auto gen = qwalk_test::rng(seed);
    std::uniform_int_distribution<int> uk(2, kmax);
    std::uniform_real_distribution<double> u01(0, 1), ud(0, 2 * std::numbers::pi);
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) out.push_back({uk(gen), u01(gen), ud(gen)});
    return out;
}

}  // namespace

TEST(fourier, unitary_and_matches_definition) {
    for (int k : {2, 3, 7}) {
        Matrix f = walk_fourier_transform(k);
        EXPECT_LT(max_abs(f - oracle_fourier(k)), 1e-14);
        EXPECT_LT(qwalk_test::deviation_from_identity(f.adjoint() * f), 1e-13);
    }
    EXPECT_THROW(fourier_matrix(0), std::invalid_argument);
    EXPECT_LT(max_abs(fourier_matrix(1) - Matrix::Ones(1, 1)), 1e-15);
}

TEST(circulant, first_row_has_two_nonzero_blocks) {
    const double rho = 0.3, a = 0.7, b = 1.9;
    BlockCirculantVector cv = circulant_vector(build_walk_operator(6, CoinParams(rho, a, b)));
    ASSERT_EQ(cv.blocks.size(), 6u);
    Mat2 a1 = Mat2::Zero(), a5 = Mat2::Zero();
    a1(0, 0) = std::sqrt(rho);
    a1(0, 1) = std::sqrt(1 - rho) * std::polar(1.0, a);
    a5(1, 0) = std::sqrt(1 - rho) * std::polar(1.0, b);
    a5(1, 1) = -std::sqrt(rho) * std::polar(1.0, a + b);
    EXPECT_LT(max_abs(cv.blocks[1] - a1), 1e-15);
    EXPECT_LT(max_abs(cv.blocks[5] - a5), 1e-15);
    for (int j : {0, 2, 3, 4}) EXPECT_EQ(max_abs(cv.blocks[j]), 0.0);
}

TEST(block_formula, equals_fourier_conjugated_oracle) {
    for (const Draw& d : draws(60, 10)) {
        Matrix f = oracle_fourier(d.k);
        Matrix conj = f * oracle_walk(d.k, d.rho, d.delta, 0) * f.adjoint();
        CoinParams p = CoinParams::from_delta(d.rho, d.delta);
        for (int l = 0; l < d.k; ++l) {
            EXPECT_LT(max_abs(Matrix(conj.block(2 * l, 2 * l, 2, 2)) - block_formula(d.k, l, p)), 1e-12);
        }
        BlockDiagonalForm form = block_diagonalize(build_walk_operator(d.k, p));
        for (int l = 0; l < d.k; ++l) {
            EXPECT_LT(max_abs(form.blocks[l] - block_formula(d.k, l, p)), 1e-12);
            for (const auto& ep : form.eigenpairs[l]) {
                EXPECT_LT((form.blocks[l] * ep.vector - ep.value * ep.vector).cwiseAbs().maxCoeff(), 1e-12);
            }
            EXPECT_LE(principal_phase(form.eigenpairs[l][0].value),
                      principal_phase(form.eigenpairs[l][1].value));
        }
    }
    EXPECT_THROW(block_formula(3, 3, CoinParams::hadamard()), std::invalid_argument);
}

TEST(closed_form, matches_dense_eigensolver_on_whole_walk) {
    for (const Draw& d : draws(200, 11)) {
        CoinParams p = CoinParams::from_delta(d.rho, d.delta);
        auto dense = qwalk_test::oracle_spectrum(oracle_walk(d.k, d.rho, d.delta, 0));
        EXPECT_LT(qwalk_test::multiset_distance(full_spectrum(d.k, p), dense), 1e-10)
            << d.k << " " << d.rho << " " << d.delta;
    }
}

TEST(closed_form, each_pair_solves_its_block) {
    for (const Draw& d : draws(100, 12)) {
        CoinParams p = CoinParams::from_delta(d.rho, d.delta);
        for (int l = 0; l < d.k; ++l) {
            Mat2 b = block_formula(d.k, l, p);
            BranchEigenvalues br = eigenvalue_branches(d.k, l, p);
            // Characteristic polynomial: trace and determinant.
            EXPECT_LT(std::abs(br.plus + br.minus - b.trace()), 1e-12);
            EXPECT_LT(std::abs(br.plus * br.minus - b.determinant()), 1e-12);
            EXPECT_NEAR(std::abs(br.plus), 1, 1e-12);
            auto [lo, hi] = eigenvalues_closed_form(d.k, l, p);
            EXPECT_LE(principal_phase(lo), principal_phase(hi));
        }
    }
}

TEST(closed_form, branch_labels_for_k4_fifth_roots) {
    // rho = (5 - sqrt5)/8, delta = 0: lambda+_{4,1} = e^{-i pi/5}, lambda-_{4,1} = e^{-4 i pi/5},
    // lambda+_{4,3} = e^{4 i pi/5}, lambda+_{4,0} = 1, lambda-_{4,2} = 1.
    CoinParams p = CoinParams::from_delta((5 - std::sqrt(5.0)) / 8, 0.0);
    const double pi = std::numbers::pi;
    EXPECT_LT(std::abs(eigenvalue_branches(4, 1, p).plus - std::polar(1.0, -pi / 5)), 1e-12);
    EXPECT_LT(std::abs(eigenvalue_branches(4, 1, p).minus - std::polar(1.0, -4 * pi / 5)), 1e-12);
    EXPECT_LT(std::abs(eigenvalue_branches(4, 3, p).plus - std::polar(1.0, 4 * pi / 5)), 1e-12);
    EXPECT_LT(std::abs(eigenvalue_branches(4, 3, p).minus - std::polar(1.0, pi / 5)), 1e-12);
    EXPECT_LT(std::abs(eigenvalue_branches(4, 0, p).plus - 1.0), 1e-12);
    EXPECT_LT(std::abs(eigenvalue_branches(4, 2, p).minus - 1.0), 1e-12);
}

TEST(phases, principal_and_distance) {
    EXPECT_DOUBLE_EQ(principal_phase(Complex(1, 0)), 0.0);
    EXPECT_NEAR(principal_phase(Complex(0, -1)), 1.5 * std::numbers::pi, 1e-15);
    EXPECT_NEAR(phase_distance(0.1, 2 * std::numbers::pi - 0.1), 0.2, 1e-14);
    EXPECT_NEAR(phase_distance(0, std::numbers::pi), std::numbers::pi, 1e-15);
}

TEST(power_eigenphase, matches_dense_power) {
    for (const Draw& d : draws(30, 13, 8)) {
        CoinParams p = CoinParams::from_delta(d.rho, d.delta);
        for (int n : {0, 1, 5, 41}) {
            Matrix dense = qwalk_test::oracle_power(oracle_walk(d.k, d.rho, d.delta, 0), n);
            EXPECT_LT(max_abs(power_eigenphase(d.k, p, n) - dense), 1e-10);
        }
    }
    EXPECT_THROW(unitary_block_power(Mat2::Identity(), -1), std::invalid_argument);
}

TEST(power_eigenphase, degenerate_block) {
    // k = 4, rho = 1, delta = 0: block 1 has the double eigenvalue -i.
    CoinParams p = CoinParams::from_delta(1.0, 0.0);
    Mat2 b = block_formula(4, 1, p);
    EXPECT_LT(max_abs(unitary_block_power(b, 3) - b * b * b), 1e-13);
}
