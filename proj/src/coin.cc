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

#include "qwalk/coin.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

// Inputs evaluated from exact expressions such as "(5-sqrt5)/8" or "pi" can
// land a rounding step outside the closed range.
constexpr double kRangeSlack = 1e-12;

double clamp_checked(double x, double lo, double hi, const char* name) {
    if (!std::isfinite(x) || x < lo - kRangeSlack || x > hi + kRangeSlack) {
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(x) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
    return std::clamp(x, lo, hi);
}

}  // namespace

CoinParams::CoinParams(double rho, double alpha, double beta)
    : rho_(clamp_checked(rho, 0.0, 1.0, "rho")),
      alpha_(clamp_checked(alpha, 0.0, std::numbers::pi, "alpha")),
      beta_(clamp_checked(beta, 0.0, std::numbers::pi, "beta")) {}

CoinParams CoinParams::from_delta(double rho, double delta) {
    double r = clamp_checked(rho, 0.0, 1.0, "rho");
    if (!std::isfinite(delta) || delta < 0.0 || delta >= 2.0 * std::numbers::pi) {
        throw std::invalid_argument("delta = " + std::to_string(delta) + " outside [0, 2pi)");
    }
    return CoinParams(r, delta, 0.0, Unchecked{});
}

CoinParams CoinParams::from_delta(double rho, ReducedFraction delta_turns) {
    if (delta_turns.num() < 0 || delta_turns.num() >= delta_turns.den()) {
        throw std::invalid_argument("delta fraction " + delta_turns.to_string() +
                                    " outside [0, 1)");
    }
    return from_delta(rho, delta_turns.radians());
}

Mat2 build_coin(const CoinParams& params) {
    const double s = std::sqrt(params.rho());
    const double c = std::sqrt(1.0 - params.rho());
    Mat2 coin;
    coin << s, c * std::polar(1.0, params.alpha()),
        c * std::polar(1.0, params.beta()), -s * std::polar(1.0, params.delta());
    return coin;
}

}  // namespace qwalk
