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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/fraction.h"
#include "qwalk/revival.h"

namespace qwalk {

enum class CaseTag { kRho0, kRho1, kK2Seeded, kK3Family, kK4Family, kTwoForm, kApproximate };

std::string_view case_tag_name(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view name);

/// A certificate plus how it was found.
struct SolutionRecord {
    RevivalCertificate certificate;
    CaseTag case_tag = CaseTag::kApproximate;
    /// delta / 2pi, when delta is an exact rational turn.
    std::optional<ReducedFraction> delta_turns;
    std::optional<std::string> rho_expr;
    /// Two-form solutions only: the primed and double-primed fraction sets.
    std::vector<std::vector<ReducedFraction>> forms;
};

struct SolutionFamily {
    int k = 0;
    CaseTag case_tag = CaseTag::kApproximate;
    ReducedFraction delta_turns;
    std::vector<SolutionRecord> solutions;
};

/// How a rational delta splits the k functions rho_l: blocks whose rho_l is
/// undefined, and the remaining blocks grouped by equal denominator
/// 1 - cos(4 pi l/k + delta). Forms are ordered by increasing denominator.
struct DeltaForms {
    int k = 0;
    ReducedFraction delta_turns;
    std::vector<int> eliminated;
    std::vector<double> denominators;
    std::vector<std::vector<int>> blocks;
};

DeltaForms analyze_delta(int k, ReducedFraction delta_turns);

/// Every x in [0, 1) with cos(4 pi x - delta) = cos(4 pi mn - delta):
/// {mn, mn + 1/2, d - mn, d - mn + 1/2} mod 1 where d = delta / 2pi.
std::vector<ReducedFraction> companion_fractions(ReducedFraction mn, ReducedFraction delta_turns);

/// Orders by (N, rho, delta) and drops records sharing
/// (k, N, round(rho * 1e12), delta).
void canonicalize(std::vector<SolutionRecord>& records);

/// rho in {0, 1} for any k >= 2 with delta = 2 pi u/v, 0 < u/v < 1.
/// edge 0: N = 2v. edge 1: N = lcm(2, k, v k), a multiple of the exact
/// period; the generators are the exact eigenphase fractions.
SolutionRecord solve_rho_edge(int k, ReducedFraction uv, int edge);

/// k = 2 seeded family. Requires uv strictly inside
/// ((2m mod n) / 2n, (2m mod n + n) / 2n); throws std::invalid_argument
/// otherwise and std::domain_error if rho falls outside (0, 1) (which happens
/// at uv = (2m mod n) / n, where rho = 0). Throws std::range_error if a
/// companion denominator exceeds max_den.
SolutionRecord solve_k2(ReducedFraction seed, ReducedFraction uv,
                        std::int64_t max_den = kDefaultMaxDen);

/// k = 2, delta = 0: every rho revives in N = 2.
SolutionRecord solve_k2_free(double rho);

/// k = 3 (and 6) with delta in {0, 1/3, 2/3} turns. Throws std::invalid_argument
/// for other deltas and std::domain_error when rho is outside (0, 1).
SolutionRecord solve_k3(ReducedFraction delta_turns, ReducedFraction mn);

/// k = 4 with delta in {0, 1/4, 1/2, 3/4} turns.
SolutionRecord solve_k4(ReducedFraction delta_turns, ReducedFraction mn);

/// Any (k, delta) that leaves a single rho form; the engine behind the
/// k = 2, 3, 4 solvers.
SolutionRecord solve_single_form(int k, ReducedFraction delta_turns, ReducedFraction mn, CaseTag tag);

/// Every single-form solution generated by a fraction with denominator
/// <= max_den and N <= max_n, canonicalized.
SolutionFamily scan_single_form(int k, ReducedFraction delta_turns, std::int64_t max_den,
                                std::int64_t max_n, CaseTag tag);

/// k in {5, 8, 10}: matches rho' = rho'' over fractions with denominator
/// <= max_den (within 1e-10) and keeps the pairs that verify with N <= max_n.
SolutionFamily solve_two_form(int k, ReducedFraction delta_turns,
                              std::int64_t max_den = kDefaultMaxDen,
                              std::int64_t max_n = kDefaultMaxDen);

inline constexpr std::int64_t kApproximateMaxN = 1'000'000;

/// Smallest N <= max_n at which every eigenphase of U_k(rho, delta) has a
/// neighbouring fraction p/N whose rho_l lies within epsilon of rho. The
/// deviation ||U^N - I|| is reported as measured, not required to be small.
std::optional<SolutionRecord> solve_approximate(int k, double rho, double delta, double epsilon,
                                                std::int64_t max_n = kApproximateMaxN);

}  // namespace qwalk
