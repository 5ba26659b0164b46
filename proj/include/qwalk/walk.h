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
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.h"

namespace qwalk {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Flat index of |position, coin> in the 2k-dimensional cycle space. Coin
/// 0 is spin-up (steps left), coin 1 is spin-down (steps right).
inline int basis_index(int position, int coin) { return 2 * position + coin; }

/// U_k = S_k (I_k (x) C), dense 2k x 2k.
struct WalkOperator {
    int k;
    CoinParams params;
    Matrix matrix;
};

/// Normalized amplitude vector over position (x) coin for a k-cycle.
class WalkerState {
 public:
    /// Throws std::invalid_argument unless |amps|^2 sums to 1 within 1e-12.
    static WalkerState from_amplitudes(int k, Vector amplitudes);
    /// Rescales to unit norm. Throws std::invalid_argument on a zero vector.
    static WalkerState normalized(int k, Vector amplitudes);
    static WalkerState basis(int k, int position, int coin);

    int k() const { return k_; }
    const Vector& amplitudes() const { return amplitudes_; }
    double norm_squared() const { return amplitudes_.squaredNorm(); }
    std::vector<double> position_probabilities() const;

 private:
    friend WalkerState evolve(const WalkerState&, const WalkOperator&, std::int64_t);
    friend WalkerState evolve_direct(const WalkerState&, const WalkOperator&, std::int64_t);
    WalkerState(int k, Vector amplitudes) : k_(k), amplitudes_(std::move(amplitudes)) {}

    int k_;
    Vector amplitudes_;
};

/// Conditional shift on a k-cycle: |i,up> -> |i-1,up>, |i,down> -> |i+1,down>.
/// Throws std::invalid_argument for k < 2.
Matrix build_shift_cycle(int k);

WalkOperator build_walk_operator(int k, const CoinParams& params);

/// Evolution switches from repeated multiplication to eigenphase powering
/// of the Fourier blocks above this many steps.
inline constexpr std::int64_t kEigenphaseThreshold = 64;

/// U^steps psi. Throws std::invalid_argument on a k mismatch or steps < 0.
WalkerState evolve(const WalkerState& state, const WalkOperator& op, std::int64_t steps);

/// Always repeated multiplication, regardless of `steps`.
WalkerState evolve_direct(const WalkerState& state, const WalkOperator& op, std::int64_t steps);

/// Dense matrix power by binary exponentiation.
Matrix power_direct(const Matrix& m, std::int64_t n);

/// max_ij |m - I|_ij
double identity_deviation(const Matrix& m);

// Walks on the infinite line, truncated to the light cone.

/// Up/down amplitude pair at a single site.
using CoinAmplitudes = std::array<Complex, 2>;

/// Amplitudes on the contiguous window [first_position, first_position + size).
struct LineDistribution {
    int first_position = 0;
    std::vector<CoinAmplitudes> sites;

    int last_position() const { return first_position + static_cast<int>(sites.size()) - 1; }
    double probability(int position) const;
    double total_probability() const;
};

/// Coin-then-shift, `steps` times, starting from `initial` (position -> amplitudes).
/// Every returned distribution shares the window [-(steps + r), steps + r]
/// where r bounds the initial support. Element t is the state after t steps.
std::vector<LineDistribution> line_walk_trajectory(const std::map<int, CoinAmplitudes>& initial,
                                                   const CoinParams& params, int steps);

LineDistribution line_walk(const std::map<int, CoinAmplitudes>& initial, const CoinParams& params,
                           int steps);

}  // namespace qwalk
