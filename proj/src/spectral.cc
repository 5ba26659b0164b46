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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwalk/errors.h"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOffBlockTolerance = 1e-10;
constexpr double kClosedFormTolerance = 1e-8;

void require_block_index(int k, int l) {
    if (k < 1 || l < 0 || l >= k) {
        throw std::invalid_argument("block index l = " + std::to_string(l) +
                                    " outside [0, " + std::to_string(k) + ")");
    }
}

std::array<BlockEigenpair, 2> eigenpairs_of(const Mat2& block) {
    Eigen::ComplexEigenSolver<Mat2> solver(block);
    std::array<BlockEigenpair, 2> pairs;
    for (int i = 0; i < 2; ++i) {
        pairs[i] = {solver.eigenvalues()(i), solver.eigenvectors().col(i).normalized()};
    }
    if (principal_phase(pairs[1].value) < principal_phase(pairs[0].value)) {
        std::swap(pairs[0], pairs[1]);
    }
    return pairs;
}

}  // namespace

double principal_phase(Complex z) {
    double p = std::arg(z);
    if (p < 0.0) {
        p += kTwoPi;
    }
    return p >= kTwoPi ? 0.0 : p;
}

double phase_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

BlockCirculantVector circulant_vector(const WalkOperator& op) {
    BlockCirculantVector v{op.k, std::vector<Mat2>(op.k)};
    for (int j = 0; j < op.k; ++j) {
        v.blocks[j] = op.matrix.block<2, 2>(0, 2 * j);
    }
    return v;
}

Matrix fourier_matrix(int m) {
    if (m < 1) {
        throw std::invalid_argument("Fourier matrix size " + std::to_string(m) + " < 1");
    }
    Matrix f(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            // Reduce r*c mod m first so the angle stays in [0, 2pi).
            f(r, c) = std::polar(scale, kTwoPi * static_cast<double>((r * c) % m) / m);
        }
    }
    return f;
}

Matrix walk_fourier_transform(int k) {
    Matrix fk = fourier_matrix(k);
    Matrix f2 = fourier_matrix(2);
    Matrix f(2 * k, 2 * k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            f.block<2, 2>(2 * r, 2 * c) = fk(r, c) * f2;
        }
    }
    return f;
}

BlockDiagonalForm block_diagonalize(const WalkOperator& op) {
    const int k = op.k;
    Matrix f = walk_fourier_transform(k);
    Matrix d = f * op.matrix * f.adjoint();

    double residual = 0.0;
    for (int r = 0; r < 2 * k; ++r) {
        for (int c = 0; c < 2 * k; ++c) {
            if (r / 2 != c / 2) {
                residual = std::max(residual, std::abs(d(r, c)));
            }
        }
    }
    if (residual > kOffBlockTolerance) {
        throw ConsistencyError("Fourier transform left off-block residual " +
                               std::to_string(residual));
    }

    BlockDiagonalForm form{k, {}, {}};
    form.blocks.reserve(k);
    form.eigenpairs.reserve(k);
    for (int l = 0; l < k; ++l) {
        Mat2 b = d.block<2, 2>(2 * l, 2 * l);
        form.blocks.push_back(b);
        form.eigenpairs.push_back(eigenpairs_of(b));
    }
    return form;
}

Mat2 block_formula(int k, int l, const CoinParams& params) {
    require_block_index(k, l);
    const double phi = kTwoPi * static_cast<double>(l) / k;
    const Complex em = std::polar(1.0, -phi);
    const Complex ep = std::polar(1.0, phi);
    const Complex ea = std::polar(1.0, params.alpha());
    const Complex eb = std::polar(1.0, params.beta());
    const Complex ed = std::polar(1.0, params.delta());
    const double s = std::sqrt(params.rho());
    const double c = std::sqrt(1.0 - params.rho());

    Mat2 b;
    b(0, 0) = 0.5 * ((em * ea + ep * eb) * c + (em - ep * ed) * s);
    b(0, 1) = 0.5 * ((-em * ea + ep * eb) * c + (em + ep * ed) * s);
    b(1, 0) = 0.5 * ((em * ea - ep * eb) * c + (em + ep * ed) * s);
    b(1, 1) = 0.5 * ((-em * ea - ep * eb) * c + (em - ep * ed) * s);
    return b;
}

BranchEigenvalues eigenvalue_branches(int k, int l, const CoinParams& params) {
    require_block_index(k, l);
    const double phi = kTwoPi * static_cast<double>(l) / k;
    const double delta = params.delta();
    const double s = std::sqrt(params.rho());
    const Complex e = std::polar(1.0, 2.0 * phi + delta);
    const double sn = std::sin(phi + 0.5 * delta);
    const Complex root = std::sqrt(e * (1.0 - params.rho() * sn * sn));
    const Complex pre = 0.5 * std::polar(1.0, -phi);
    const Complex common = (1.0 - e) * s;
    return {pre * (common + 2.0 * root), pre * (common - 2.0 * root)};
}

std::pair<Complex, Complex> eigenvalues_closed_form(int k, int l, const CoinParams& params) {
    BranchEigenvalues br = eigenvalue_branches(k, l, params);

    // The pair is branch-independent as a set; check it against the block's
    // trace and determinant.
    Mat2 b = block_formula(k, l, params);
    const double trace_err = std::abs(br.plus + br.minus - b.trace());
    const double det_err = std::abs(br.plus * br.minus - b.determinant());
    if (trace_err > kClosedFormTolerance || det_err > kClosedFormTolerance) {
        throw ConsistencyError("closed-form eigenvalues disagree with block " + std::to_string(l) +
                               " (trace err " + std::to_string(trace_err) + ", det err " +
                               std::to_string(det_err) + ")");
    }

    Complex a = br.plus;
    Complex z = br.minus;
    if (principal_phase(z) < principal_phase(a)) {
        std::swap(a, z);
    }
    return {a, z};
}

std::vector<Complex> full_spectrum(int k, const CoinParams& params) {
    if (k < 2) {
        throw std::invalid_argument("cycle length k = " + std::to_string(k) + " < 2");
    }
    std::vector<Complex> out;
    out.reserve(2 * k);
    for (int l = 0; l < k; ++l) {
        auto [a, b] = eigenvalues_closed_form(k, l, params);
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

Mat2 unitary_block_power(const Mat2& block, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("negative matrix power");
    }
    Eigen::ComplexSchur<Mat2> schur(block);
    const Mat2& q = schur.matrixU();
    const Mat2& t = schur.matrixT();
    // A unitary block is normal, so T is diagonal up to rounding.
    Eigen::Vector2cd d;
    for (int i = 0; i < 2; ++i) {
        double theta = std::arg(t(i, i));
        d(i) = std::polar(1.0, std::fmod(static_cast<double>(n) * theta, kTwoPi));
    }
    return q * d.asDiagonal() * q.adjoint();
}

Matrix power_eigenphase(int k, const CoinParams& params, std::int64_t n) {
    Matrix f = walk_fourier_transform(k);
    Matrix d = Matrix::Zero(2 * k, 2 * k);
    for (int l = 0; l < k; ++l) {
        d.block<2, 2>(2 * l, 2 * l) = unitary_block_power(block_formula(k, l, params), n);
    }
    return f.adjoint() * d * f;
}

}  // namespace qwalk
