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

#include <complex>

#include <Eigen/Dense>

#include "qwalk/fraction.h"

namespace qwalk {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Parameters (rho, alpha, beta) of the general two-state coin
///
///     [  sqrt(rho)                 sqrt(1-rho) e^{i alpha}        ]
///     [  sqrt(1-rho) e^{i beta}   -sqrt(rho) e^{i (alpha+beta)}   ]
///
/// with 0 <= rho <= 1 and alpha, beta in [0, pi]. Only delta = alpha + beta
/// enters the spectrum of the walk operator, so `from_delta` stores
/// (alpha, beta) = (delta, 0) for any delta in [0, 2 pi).
class CoinParams {
 public:
    CoinParams(double rho, double alpha, double beta);

    static CoinParams from_delta(double rho, double delta);
    static CoinParams from_delta(double rho, ReducedFraction delta_turns);
    static CoinParams hadamard() { return CoinParams(0.5, 0.0, 0.0); }

    double rho() const { return rho_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double delta() const { return alpha_ + beta_; }

 private:
    struct Unchecked {};
    CoinParams(double rho, double alpha, double beta, Unchecked)
        : rho_(rho), alpha_(alpha), beta_(beta) {}

    double rho_;
    double alpha_;
    double beta_;
};

Mat2 build_coin(const CoinParams& params);

}  // namespace qwalk
