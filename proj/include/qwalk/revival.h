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
#include <utility>
#include <vector>

#include "qwalk/coin.h"
#include "qwalk/fraction.h"

namespace qwalk {

inline constexpr double kPhaseTolerance = 1e-9;
inline constexpr double kCertificationTolerance = 1e-9;
inline constexpr double kUndefinedRhoCutoff = 1e-12;
inline constexpr std::int64_t kDefaultMaxDen = 1000;
/// Certificates cross-check eigenphase powering against dense powering up to here.
inline constexpr std::int64_t kDirectPoweringLimit = 1000;

/// rho_l = (1 - cos(4 pi m/n - delta)) / (1 - cos(4 pi l/k + delta)): the
/// coin weight at which block l has the de Moivre eigenvalue e^{2 pi i m/n}
/// (up to sign of the eigenvalue, see below). Returns nullopt when the
/// denominator is below 1e-12; the block's eigenvalues are then
/// rho-independent constants. The result is not clamped to [0, 1].
///
/// Block l's two eigenphases x satisfy
/// sin^2(2 pi x - delta/2) = rho sin^2(2 pi l/k + delta/2), so a fraction
/// m/n with rho_l(m/n) = rho places either e^{2 pi i m/n} or
/// -e^{2 pi i m/n} in the block's spectrum, depending on the sign of
/// sin(2 pi m/n - delta/2) relative to sin(2 pi l/k + delta/2).
std::optional<double> rho_for(int k, int l, ReducedFraction mn, double delta);

/// Eigenvalues of block l when its rho_l is undefined:
/// {e^{-2 pi i l/k}, -e^{-2 pi i l/k}}. Throws std::invalid_argument unless
/// 1 - cos(4 pi l/k + delta) vanishes (within 1e-12).
std::pair<Complex, Complex> undefined_rho_eigenvalues(int k, int l, double delta);

/// The same two constants as exact fractions of a turn: {-l/k, 1/2 - l/k} mod 1.
std::pair<ReducedFraction, ReducedFraction> undefined_rho_phases(int k, int l);

/// Continued-fraction reconstruction of phase / 2pi (mod 1). Returns the first
/// convergent p/q with q <= max_den and |phase/2pi - p/q| < tol, reduced into
/// [0, 1); nullopt if none.
std::optional<ReducedFraction> reconstruct_fraction(double phase, std::int64_t max_den, double tol);

/// Evidence that U_k^N = I: the eigenphase fractions that generate the
/// revival and the measured max_ij |U^N - I|.
struct RevivalCertificate {
    int k = 0;
    std::int64_t n = 0;
    double rho = 0.0;
    double delta = 0.0;
    std::vector<ReducedFraction> generators;
    double max_deviation = 0.0;
};

/// ||U_k^n - I||_max from eigenphase powering, cross-checked by dense
/// powering when n <= kDirectPoweringLimit; the larger of the two is returned.
double revival_deviation(int k, const CoinParams& params, std::int64_t n);

/// Smallest N with U_k^N = I, found by reconstructing every eigenphase as a
/// fraction with denominator <= max_n. nullopt if a phase is not a de Moivre
/// number at that resolution, if N > max_n, or if the revival fails to
/// verify below `tol`.
std::optional<RevivalCertificate> revival_period(int k, const CoinParams& params,
                                                 std::int64_t max_n = kDefaultMaxDen,
                                                 double tol = kCertificationTolerance);

}  // namespace qwalk
