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

#include "qwalk/revival.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwalk/spectral.h"
#include "qwalk/walk.h"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double fractional_part(double x) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
}

}  // namespace

std::optional<double> rho_for(int k, int l, ReducedFraction mn, double delta) {
    if (k < 1 || l < 0 || l >= k) {
        throw std::invalid_argument("block index l = " + std::to_string(l) + " outside [0, " +
                                    std::to_string(k) + ")");
    }
    const double den = 1.0 - std::cos(4.0 * std::numbers::pi * l / k + delta);
    if (std::abs(den) < kUndefinedRhoCutoff) {
        return std::nullopt;
    }
    const double num = 1.0 - std::cos(4.0 * std::numbers::pi * mn.value() - delta);
    return num / den;
}

std::pair<Complex, Complex> undefined_rho_eigenvalues(int k, int l, double delta) {
    if (k < 1 || l < 0 || l >= k) {
        throw std::invalid_argument("block index out of range");
    }
    const double den = 1.0 - std::cos(4.0 * std::numbers::pi * l / k + delta);
    if (std::abs(den) >= kUndefinedRhoCutoff) {
        throw std::invalid_argument("rho_" + std::to_string(l) + " is defined for k = " +
                                    std::to_string(k) + " at this delta");
    }
    Complex e = std::polar(1.0, -kTwoPi * l / k);
    return {e, -e};
}

std::pair<ReducedFraction, ReducedFraction> undefined_rho_phases(int k, int l) {
    ReducedFraction base = (-ReducedFraction(l, k)).mod_one();
    return {base, (base + ReducedFraction(1, 2)).mod_one()};
}

std::optional<ReducedFraction> reconstruct_fraction(double phase, std::int64_t max_den, double tol) {
    if (max_den < 1 || !(tol > 0.0)) {
        throw std::invalid_argument("reconstruct_fraction needs max_den >= 1 and tol > 0");
    }
    const double x = fractional_part(phase / kTwoPi);

    // Convergents h/q of the continued fraction [a0; a1, a2, ...] of x.
    std::int64_t h_prev = 0, h = 1;
    std::int64_t q_prev = 1, q = 0;
    double rem = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_real = std::floor(rem);
        if (a_real > static_cast<double>(max_den)) {
            break;
        }
        const auto a = static_cast<std::int64_t>(a_real);
        const std::int64_t h_next = a * h + h_prev;
        const std::int64_t q_next = a * q + q_prev;
        if (q_next > max_den) {
            break;
        }
        h_prev = std::exchange(h, h_next);
        q_prev = std::exchange(q, q_next);
        // Wrap-around distance, so x just below 1 matches 1/1 -> 0/1.
        double err = std::abs(x - static_cast<double>(h) / static_cast<double>(q));
        err = std::min(err, 1.0 - err);
        if (err < tol) {
            return ReducedFraction(h, q).mod_one();
        }
        const double frac = rem - a_real;
        if (frac <= 0.0) {
            break;
        }
        rem = 1.0 / frac;
    }
    return std::nullopt;
}

double revival_deviation(int k, const CoinParams& params, std::int64_t n) {
    double dev = identity_deviation(power_eigenphase(k, params, n));
    if (n <= kDirectPoweringLimit) {
        dev = std::max(dev, identity_deviation(power_direct(build_walk_operator(k, params).matrix, n)));
    }
    return dev;
}

std::optional<RevivalCertificate> revival_period(int k, const CoinParams& params,
                                                 std::int64_t max_n, double tol) {
    if (max_n < 1) {
        throw std::invalid_argument("max_n must be >= 1");
    }
    std::vector<ReducedFraction> gens;
    for (Complex z : full_spectrum(k, params)) {
        auto f = reconstruct_fraction(principal_phase(z), max_n, kPhaseTolerance);
        if (!f) {
            return std::nullopt;
        }
        gens.push_back(*f);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t n;
    try {
        n = lcm_denominators(gens);
    } catch (const std::range_error&) {
        return std::nullopt;
    }
    if (n > max_n) {
        return std::nullopt;
    }
    double dev = revival_deviation(k, params, n);
    if (!(dev < tol)) {
        return std::nullopt;
    }
    return RevivalCertificate{k, n, params.rho(), params.delta(), std::move(gens), dev};
}

}  // namespace qwalk
