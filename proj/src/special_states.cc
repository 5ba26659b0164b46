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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qwalk/errors.h"
#include "qwalk/spectral.h"

namespace qwalk {

namespace {

constexpr double kResidualTolerance = 1e-10;
constexpr double kDegenerateGap = 1e-10;

}  // namespace

Matrix EigenBasis::matrix() const {
    Matrix m(2 * k, static_cast<Eigen::Index>(entries.size()));
    for (std::size_t j = 0; j < entries.size(); ++j) {
        m.col(static_cast<Eigen::Index>(j)) = entries[j].vector;
    }
    return m;
}

EigenBasis eigenbasis(int k, const CoinParams& params) {
    const WalkOperator op = build_walk_operator(k, params);
    const Matrix f_dag = walk_fourier_transform(k).adjoint();
    EigenBasis basis{k, params, {}};
    for (int l = 0; l < k; ++l) {
        const Mat2 block = block_formula(k, l, params);
        // Schur vectors of a normal matrix are orthonormal eigenvectors, which
        // also covers the degenerate case.
        Eigen::ComplexSchur<Mat2> schur(block);
        const BranchEigenvalues br = eigenvalue_branches(k, l, params);
        std::array<EigenEntry, 2> pair;
        for (int i = 0; i < 2; ++i) {
            EigenEntry& e = pair[i];
            e.value = schur.matrixT()(i, i);
            e.value /= std::abs(e.value);
            e.block = l;
            e.branch = std::abs(e.value - br.plus) <= std::abs(e.value - br.minus) ? 1 : -1;
            Vector embedded = Vector::Zero(2 * k);
            embedded.segment<2>(2 * l) = schur.matrixU().col(i);
            e.vector = f_dag * embedded;
        }
        const bool degenerate = std::abs(pair[0].value - pair[1].value) < kDegenerateGap;
        if (degenerate) {
            pair[0].branch = 1;
            pair[1].branch = -1;
        } else if (pair[0].branch == pair[1].branch) {
            throw ConsistencyError("block " + std::to_string(l) +
                                   " eigenvalues do not separate into branches");
        }
        std::sort(pair.begin(), pair.end(), [](const EigenEntry& a, const EigenEntry& b) {
            return principal_phase(a.value) < principal_phase(b.value);
        });
        for (EigenEntry& e : pair) {
            e.degenerate = degenerate;
            const double residual = (op.matrix * e.vector - e.value * e.vector).cwiseAbs().maxCoeff();
            if (!(residual < kResidualTolerance)) {
                throw ConsistencyError("eigenvector residual " + std::to_string(residual) +
                                       " at block " + std::to_string(l));
            }
            basis.entries.push_back(std::move(e));
        }
    }
    return basis;
}

int basis_rank(const EigenBasis& basis, double tol) {
    Eigen::JacobiSVD<Matrix> svd(basis.matrix());
    const auto& s = svd.singularValues();
    return static_cast<int>((s.array() > tol).count());
}

std::optional<std::vector<EigenEntry>> demoivre_subspace(const EigenBasis& basis, std::int64_t n,
                                                         double tol) {
    if (n < 1) {
        throw std::invalid_argument("target period must be >= 1");
    }
    std::vector<EigenEntry> out;
    for (const EigenEntry& e : basis.entries) {
        const double phase = std::fmod(static_cast<double>(n) * std::arg(e.value), 2.0 * std::numbers::pi);
        if (std::abs(std::polar(1.0, phase) - 1.0) < tol) {
            out.push_back(e);
        }
    }
    if (out.empty()) {
        return std::nullopt;
    }
    return out;
}

WalkerState build_special_state(const std::vector<EigenEntry>& subset,
                                const std::vector<Complex>& coefficients) {
    if (subset.empty()) {
        throw std::invalid_argument("empty eigenvector subset");
    }
    if (subset.size() != coefficients.size()) {
        throw std::invalid_argument(std::to_string(coefficients.size()) + " coefficients for " +
                                    std::to_string(subset.size()) + " eigenvectors");
    }
    const Eigen::Index dim = subset.front().vector.size();
    Vector v = Vector::Zero(dim);
    for (std::size_t j = 0; j < subset.size(); ++j) {
        v += coefficients[j] * subset[j].vector;
    }
    return WalkerState::normalized(static_cast<int>(dim / 2), std::move(v));
}

std::vector<double> fidelity_scan(const WalkerState& psi, const WalkOperator& op, std::int64_t steps) {
    if (steps < 0) {
        throw std::invalid_argument("negative step count");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    Vector cur = psi.amplitudes();
    for (std::int64_t t = 0; t <= steps; ++t) {
        if (t > 0) {
            cur = op.matrix * cur;
        }
        out.push_back(std::abs(psi.amplitudes().dot(cur)));
    }
    return out;
}

}  // namespace qwalk
