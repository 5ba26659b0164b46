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

#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/coin.h"
#include "qwalk/walk.h"

namespace qwalk {

/// Eigenpair of U_k obtained from block l of its Fourier form.
struct EigenEntry {
    Complex value;
    Vector vector;  // unit norm, length 2k
    int block = 0;
    /// +1 or -1: which square-root branch of the closed form the value matches.
    int branch = 1;
    /// The block's two eigenvalues coincide (within 1e-10); the pair is then
    /// an arbitrary orthonormal basis of the block.
    bool degenerate = false;
};

struct EigenBasis {
    int k;
    CoinParams params;
    /// 2k entries, block-major, each block ordered by principal phase.
    std::vector<EigenEntry> entries;

    /// Columns are the entry vectors.
    Matrix matrix() const;
};

/// Throws ConsistencyError if any |U v - lambda v| reaches 1e-10.
EigenBasis eigenbasis(int k, const CoinParams& params);

/// Numerical rank of the basis matrix (singular values above tol).
int basis_rank(const EigenBasis& basis, double tol = 1e-10);

/// Entries with |lambda^n - 1| < tol; nullopt if none qualify.
/// Throws std::invalid_argument for n < 1.
std::optional<std::vector<EigenEntry>> demoivre_subspace(const EigenBasis& basis, std::int64_t n,
                                                         double tol = 1e-9);

/// Normalized sum coefficients[j] * subset[j].vector. Throws
/// std::invalid_argument on a size mismatch, an empty subset or a vector
/// that cancels to zero.
WalkerState build_special_state(const std::vector<EigenEntry>& subset,
                                const std::vector<Complex>& coefficients);

/// |<psi| U^t |psi>| for t = 0..steps.
std::vector<double> fidelity_scan(const WalkerState& psi, const WalkOperator& op, std::int64_t steps);

}  // namespace qwalk
