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

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qwalk/walk.h"

namespace qwalk {

/// The k 2x2 blocks (a_0, ..., a_{k-1}) of the first block row of a
/// block-circulant matrix, so that block (m, n) equals a_{(n - m) mod k}.
struct BlockCirculantVector {
    int k;
    std::vector<Mat2> blocks;
};

BlockCirculantVector circulant_vector(const WalkOperator& op);

struct BlockEigenpair {
    Complex value;
    Eigen::Vector2cd vector;
};

/// F U_k F^dagger restricted to its diagonal 2x2 blocks, F = F^k (x) F^2.
struct BlockDiagonalForm {
    int k;
    std::vector<Mat2> blocks;
    /// Per block, sorted by principal phase in [0, 2 pi).
    std::vector<std::array<BlockEigenpair, 2>> eigenpairs;
};

/// (1/sqrt(M)) e^{2 pi i m n / M}. Throws std::invalid_argument for M < 1.
Matrix fourier_matrix(int m);

/// F^k (x) F^2, position factor first.
Matrix walk_fourier_transform(int k);

/// Conjugates by the Fourier transform and extracts the diagonal blocks.
/// Throws ConsistencyError if any off-block entry exceeds 1e-10.
BlockDiagonalForm block_diagonalize(const WalkOperator& op);

/// Closed form of the l-th diagonal block U_{k,l}.
/// Throws std::invalid_argument unless 0 <= l < k.
Mat2 block_formula(int k, int l, const CoinParams& params);

/// The two block eigenvalues as given by the closed form with the principal
/// square root: `plus` takes +sqrt, `minus` takes -sqrt.
struct BranchEigenvalues {
    Complex plus;
    Complex minus;
};

BranchEigenvalues eigenvalue_branches(int k, int l, const CoinParams& params);

/// Closed-form eigenvalues of U_{k,l}, sorted by principal phase.
std::pair<Complex, Complex> eigenvalues_closed_form(int k, int l, const CoinParams& params);

/// All 2k eigenvalues, block by block (block l contributes entries 2l, 2l+1).
std::vector<Complex> full_spectrum(int k, const CoinParams& params);

/// Principal phase of z in [0, 2 pi).
double principal_phase(Complex z);

/// Distance between two angles on the circle, in [0, pi].
double phase_distance(double a, double b);

/// U_k^n assembled from the Fourier blocks, F^dagger diag(U_{k,l}^n) F.
Matrix power_eigenphase(int k, const CoinParams& params, std::int64_t n);

/// B^n for a 2x2 unitary B via its Schur form.
Mat2 unitary_block_power(const Mat2& block, std::int64_t n);

}  // namespace qwalk
