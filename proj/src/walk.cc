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

#include "qwalk/walk.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/spectral.h"

namespace qwalk {

namespace {

constexpr double kNormTolerance = 1e-12;

void require_cycle(int k) {
    if (k < 2) {
        throw std::invalid_argument("cycle length k = " + std::to_string(k) + " < 2");
    }
}

}  // namespace

WalkerState WalkerState::from_amplitudes(int k, Vector amplitudes) {
    require_cycle(k);
    if (amplitudes.size() != 2 * k) {
        throw std::invalid_argument("expected " + std::to_string(2 * k) + " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    }
    if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized: sum |a|^2 = " +
                                    std::to_string(amplitudes.squaredNorm()));
    }
    return WalkerState(k, std::move(amplitudes));
}

WalkerState WalkerState::normalized(int k, Vector amplitudes) {
    require_cycle(k);
    if (amplitudes.size() != 2 * k) {
        throw std::invalid_argument("expected " + std::to_string(2 * k) + " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    }
    double n = amplitudes.norm();
    if (!(n > 0.0)) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return WalkerState(k, amplitudes / n);
}

WalkerState WalkerState::basis(int k, int position, int coin) {
    require_cycle(k);
    if (position < 0 || position >= k || coin < 0 || coin > 1) {
        throw std::invalid_argument("basis state out of range");
    }
    Vector v = Vector::Zero(2 * k);
    v(basis_index(position, coin)) = 1.0;
    return WalkerState(k, std::move(v));
}

std::vector<double> WalkerState::position_probabilities() const {
    std::vector<double> p(k_);
    for (int i = 0; i < k_; ++i) {
        p[i] = std::norm(amplitudes_(basis_index(i, 0))) + std::norm(amplitudes_(basis_index(i, 1)));
    }
    return p;
}

Matrix build_shift_cycle(int k) {
    require_cycle(k);
    Matrix s = Matrix::Zero(2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int coin = 0; coin < 2; ++coin) {
            int target = (i + 2 * coin - 1 + k) % k;
            s(basis_index(target, coin), basis_index(i, coin)) = 1.0;
        }
    }
    return s;
}

WalkOperator build_walk_operator(int k, const CoinParams& params) {
    require_cycle(k);
    Mat2 coin = build_coin(params);
    // S (I (x) C) without forming either factor: row |j,s> picks up coin row s
    // from the site the shift moved into j.
    Matrix u = Matrix::Zero(2 * k, 2 * k);
    for (int j = 0; j < k; ++j) {
        for (int s = 0; s < 2; ++s) {
            int source = (j - (2 * s - 1) + k) % k;
            for (int t = 0; t < 2; ++t) {
                u(basis_index(j, s), basis_index(source, t)) += coin(s, t);
            }
        }
    }
    return WalkOperator{k, params, std::move(u)};
}

WalkerState evolve_direct(const WalkerState& state, const WalkOperator& op, std::int64_t steps) {
    if (state.k() != op.k) {
        throw std::invalid_argument("state has k = " + std::to_string(state.k()) +
                                    " but operator has k = " + std::to_string(op.k));
    }
    if (steps < 0) {
        throw std::invalid_argument("negative step count");
    }
    Vector v = state.amplitudes();
    for (std::int64_t t = 0; t < steps; ++t) {
        v = op.matrix * v;
    }
    return WalkerState(state.k(), std::move(v));
}

WalkerState evolve(const WalkerState& state, const WalkOperator& op, std::int64_t steps) {
    if (steps <= kEigenphaseThreshold) {
        return evolve_direct(state, op, steps);
    }
    if (state.k() != op.k) {
        throw std::invalid_argument("state has k = " + std::to_string(state.k()) +
                                    " but operator has k = " + std::to_string(op.k));
    }
    const int k = op.k;
    Matrix f = walk_fourier_transform(k);
    Vector v = f * state.amplitudes();
    for (int l = 0; l < k; ++l) {
        Mat2 p = unitary_block_power(block_formula(k, l, op.params), steps);
        Eigen::Vector2cd seg = p * v.segment<2>(2 * l);
        v.segment<2>(2 * l) = seg;
    }
    return WalkerState(k, f.adjoint() * v);
}

Matrix power_direct(const Matrix& m, std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("negative matrix power");
    }
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

double identity_deviation(const Matrix& m) {
    return (m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double LineDistribution::probability(int position) const {
    int idx = position - first_position;
    if (idx < 0 || idx >= static_cast<int>(sites.size())) {
        return 0.0;
    }
    return std::norm(sites[idx][0]) + std::norm(sites[idx][1]);
}

double LineDistribution::total_probability() const {
    double total = 0.0;
    for (const auto& s : sites) {
        total += std::norm(s[0]) + std::norm(s[1]);
    }
    return total;
}

std::vector<LineDistribution> line_walk_trajectory(const std::map<int, CoinAmplitudes>& initial,
                                                   const CoinParams& params, int steps) {
    if (steps < 0) {
        throw std::invalid_argument("negative step count");
    }
    int reach = 0;
    for (const auto& [pos, amps] : initial) {
        reach = std::max(reach, std::abs(pos));
    }
    const int half = steps + reach;
    const int width = 2 * half + 1;

    LineDistribution current{-half, std::vector<CoinAmplitudes>(width, CoinAmplitudes{0.0, 0.0})};
    for (const auto& [pos, amps] : initial) {
        current.sites[pos + half] = amps;
    }

    const Mat2 coin = build_coin(params);
    std::vector<LineDistribution> out;
    out.reserve(steps + 1);
    out.push_back(current);
    for (int t = 0; t < steps; ++t) {
        LineDistribution next{-half, std::vector<CoinAmplitudes>(width, CoinAmplitudes{0.0, 0.0})};
        for (int idx = 0; idx < width; ++idx) {
            const auto& a = current.sites[idx];
            Complex up = coin(0, 0) * a[0] + coin(0, 1) * a[1];
            Complex down = coin(1, 0) * a[0] + coin(1, 1) * a[1];
            // The light cone keeps amplitude away from the window edges.
            if (idx > 0) next.sites[idx - 1][0] += up;
            if (idx + 1 < width) next.sites[idx + 1][1] += down;
        }
        current = std::move(next);
        out.push_back(current);
    }
    return out;
}

LineDistribution line_walk(const std::map<int, CoinAmplitudes>& initial, const CoinParams& params,
                           int steps) {
    return line_walk_trajectory(initial, params, steps).back();
}

}  // namespace qwalk
