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

#include "qwalk/solver.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "qwalk/coin.h"
#include "qwalk/errors.h"
#include "qwalk/spectral.h"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRhoOpenMargin = 1e-12;
constexpr double kFormMatchTolerance = 1e-10;

constexpr std::array<std::pair<CaseTag, std::string_view>, 7> kTagNames{{
    {CaseTag::kRho0, "rho0"},
    {CaseTag::kRho1, "rho1"},
    {CaseTag::kK2Seeded, "k2_seeded"},
    {CaseTag::kK3Family, "k3_family"},
    {CaseTag::kK4Family, "k4_family"},
    {CaseTag::kTwoForm, "two_form"},
    {CaseTag::kApproximate, "approximate"},
}};

void sort_unique(std::vector<ReducedFraction>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool strictly_inside_unit(double rho) {
    return rho > kRhoOpenMargin && rho < 1.0 - kRhoOpenMargin;
}

double form_numerator(ReducedFraction x, double delta) {
    return 1.0 - std::cos(4.0 * kPi * x.value() - delta);
}

std::vector<ReducedFraction> eliminated_phases(const DeltaForms& forms) {
    std::vector<ReducedFraction> out;
    for (int l : forms.eliminated) {
        auto [a, b] = undefined_rho_phases(forms.k, l);
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

void require_turn(ReducedFraction f, const char* what) {
    if (f.num() < 0 || f.num() >= f.den()) {
        throw std::invalid_argument(std::string(what) + " " + f.to_string() + " outside [0, 1)");
    }
}

SolutionRecord certify(int k, double rho, ReducedFraction delta, std::vector<ReducedFraction> gens,
                       std::int64_t n, CaseTag tag) {
    sort_unique(gens);
    const CoinParams params = CoinParams::from_delta(rho, delta);
    const double dev = revival_deviation(k, params, n);
    if (!(dev < kCertificationTolerance)) {
        throw ConsistencyError("k = " + std::to_string(k) + ", N = " + std::to_string(n) +
                               ", rho = " + std::to_string(rho) + ", delta = " +
                               delta.to_string() + " failed to verify (deviation " +
                               std::to_string(dev) + ")");
    }
    SolutionRecord rec;
    rec.certificate = RevivalCertificate{k, n, params.rho(), params.delta(), std::move(gens), dev};
    rec.case_tag = tag;
    rec.delta_turns = delta;
    return rec;
}

// Single-form generator set for x: its companions plus the constant phases of
// the eliminated blocks.
std::vector<ReducedFraction> single_form_generators(const DeltaForms& forms, ReducedFraction x) {
    std::vector<ReducedFraction> gens = companion_fractions(x, forms.delta_turns);
    for (auto f : eliminated_phases(forms)) {
        gens.push_back(f);
    }
    sort_unique(gens);
    return gens;
}

std::int64_t reduced_count_upper_bound(std::int64_t max_den) {
    return max_den * (max_den + 1) / 2;
}

template <typename Fn>
void for_each_turn_fraction(std::int64_t max_den, Fn&& fn) {
    for (std::int64_t n = 1; n <= max_den; ++n) {
        for (std::int64_t m = 0; m < n; ++m) {
            if (std::gcd(m, n) == 1) {
                fn(ReducedFraction(m, n));
            }
        }
    }
}

}  // namespace

std::string_view case_tag_name(CaseTag tag) {
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) return name;
    }
    return "unknown";
}

std::optional<CaseTag> parse_case_tag(std::string_view name) {
    for (const auto& [t, n] : kTagNames) {
        if (n == name) return t;
    }
    return std::nullopt;
}

DeltaForms analyze_delta(int k, ReducedFraction delta_turns) {
    if (k < 2) {
        throw std::invalid_argument("cycle length k = " + std::to_string(k) + " < 2");
    }
    require_turn(delta_turns, "delta");
    DeltaForms out;
    out.k = k;
    out.delta_turns = delta_turns;
    // Denominator 1 - cos(2 pi r_l) with r_l = 2l/k + delta/2pi; r and 1 - r
    // give the same value, so min(r, 1 - r) keys the form exactly.
    std::map<ReducedFraction, std::vector<int>> by_key;
    for (int l = 0; l < k; ++l) {
        ReducedFraction r = (ReducedFraction(2 * l, k) + delta_turns).mod_one();
        if (r.num() == 0) {
            out.eliminated.push_back(l);
            continue;
        }
        ReducedFraction key = std::min(r, ReducedFraction(1, 1) - r);
        by_key[key].push_back(l);
    }
    for (const auto& [key, blocks] : by_key) {
        out.denominators.push_back(1.0 - std::cos(2.0 * kPi * key.value()));
        out.blocks.push_back(blocks);
    }
    return out;
}

std::vector<ReducedFraction> companion_fractions(ReducedFraction mn, ReducedFraction delta_turns) {
    const ReducedFraction half(1, 2);
    std::vector<ReducedFraction> out{
        mn.mod_one(),
        (mn + half).mod_one(),
        (delta_turns - mn).mod_one(),
        (delta_turns - mn + half).mod_one(),
    };
    sort_unique(out);
    return out;
}

void canonicalize(std::vector<SolutionRecord>& records) {
    auto delta_key = [](const SolutionRecord& r) {
        return r.delta_turns.value_or(ReducedFraction(0, 1));
    };
    auto key = [&](const SolutionRecord& r) {
        return std::make_tuple(r.certificate.n, std::llround(r.certificate.rho * 1e12), delta_key(r),
                               r.certificate.k);
    };
    std::stable_sort(records.begin(), records.end(), [&](const auto& a, const auto& b) {
        return std::make_tuple(a.certificate.n, a.certificate.rho, delta_key(a), a.certificate.k) <
               std::make_tuple(b.certificate.n, b.certificate.rho, delta_key(b), b.certificate.k);
    });
    std::vector<SolutionRecord> out;
    for (auto& r : records) {
        if (!out.empty() && key(out.back()) == key(r)) {
            continue;
        }
        out.push_back(std::move(r));
    }
    records = std::move(out);
}

SolutionRecord solve_rho_edge(int k, ReducedFraction uv, int edge) {
    if (k < 2) {
        throw std::invalid_argument("cycle length k = " + std::to_string(k) + " < 2");
    }
    if (uv.num() <= 0 || uv.num() >= uv.den()) {
        throw std::invalid_argument("u/v = " + uv.to_string() + " must lie in (0, 1)");
    }
    if (edge != 0 && edge != 1) {
        throw std::invalid_argument("edge must be 0 or 1");
    }
    const ReducedFraction half(1, 2);
    std::vector<ReducedFraction> gens;
    std::int64_t n;
    if (edge == 0) {
        // Spectrum {e^{i delta/2}, -e^{i delta/2}} in every block.
        ReducedFraction h = uv * half;
        gens = {h.mod_one(), (h + half).mod_one()};
        n = 2 * uv.den();
    } else {
        // Spectrum {e^{-2 pi i l/k}, -e^{i (2 pi l/k + delta)}}.
        for (int l = 0; l < k; ++l) {
            gens.push_back((-ReducedFraction(l, k)).mod_one());
            gens.push_back((ReducedFraction(l, k) + uv + half).mod_one());
        }
        const std::int64_t extra[] = {2, k, checked_lcm(1, uv.den()) * k};
        n = lcm_denominators({}, extra);
    }
    SolutionRecord rec = certify(k, edge == 0 ? 0.0 : 1.0, uv, std::move(gens), n,
                                 edge == 0 ? CaseTag::kRho0 : CaseTag::kRho1);
    rec.rho_expr = edge == 0 ? "0" : "1";
    return rec;
}

SolutionRecord solve_single_form(int k, ReducedFraction delta_turns, ReducedFraction mn, CaseTag tag) {
    const DeltaForms forms = analyze_delta(k, delta_turns);
    if (forms.denominators.size() != 1) {
        throw std::invalid_argument("delta = " + delta_turns.to_string() + " leaves " +
                                    std::to_string(forms.denominators.size()) +
                                    " independent rho forms for k = " + std::to_string(k) +
                                    "; expected exactly one");
    }
    const ReducedFraction x = mn.mod_one();
    const double rho = form_numerator(x, delta_turns.radians()) / forms.denominators.front();
    if (!strictly_inside_unit(rho)) {
        throw std::domain_error("m/n = " + mn.to_string() + " with delta = " +
                                delta_turns.to_string() + " gives rho = " + std::to_string(rho) +
                                ", outside (0, 1)");
    }
    std::vector<ReducedFraction> gens = single_form_generators(forms, x);
    const std::int64_t n = lcm_denominators(gens);
    return certify(k, rho, delta_turns, std::move(gens), n, tag);
}

SolutionRecord solve_k2(ReducedFraction seed, ReducedFraction uv, std::int64_t max_den) {
    const ReducedFraction s = seed.mod_one();
    const std::int64_t twice_mod = (2 * s.num()) % s.den();
    const ReducedFraction lo(twice_mod, 2 * s.den());
    const ReducedFraction hi(twice_mod + s.den(), 2 * s.den());
    if (!(lo < uv && uv < hi)) {
        throw std::invalid_argument("u/v = " + uv.to_string() + " outside the admissible window (" +
                                    lo.to_string() + ", " + hi.to_string() + ") for seed " +
                                    seed.to_string());
    }
    SolutionRecord rec = solve_single_form(2, uv, s, CaseTag::kK2Seeded);
    for (const auto& g : rec.certificate.generators) {
        if (g.den() > max_den) {
            throw std::range_error("companion fraction " + g.to_string() + " exceeds max_den " +
                                   std::to_string(max_den));
        }
    }
    return rec;
}

SolutionRecord solve_k2_free(double rho) {
    const ReducedFraction zero(0, 1);
    const DeltaForms forms = analyze_delta(2, zero);
    std::vector<ReducedFraction> gens = eliminated_phases(forms);
    sort_unique(gens);
    const std::int64_t n = lcm_denominators(gens);
    return certify(2, rho, zero, std::move(gens), n, CaseTag::kK2Seeded);
}

SolutionRecord solve_k3(ReducedFraction delta_turns, ReducedFraction mn) {
    if (delta_turns != ReducedFraction(0, 1) && delta_turns != ReducedFraction(1, 3) &&
        delta_turns != ReducedFraction(2, 3)) {
        throw std::invalid_argument("k = 3 solver needs delta in {0, 1/3, 2/3} turns, got " +
                                    delta_turns.to_string());
    }
    SolutionRecord rec = solve_single_form(3, delta_turns, mn, CaseTag::kK3Family);
    // Odd k and 2k share the solution set.
    const double dev6 = revival_deviation(
        6, CoinParams::from_delta(rec.certificate.rho, delta_turns), rec.certificate.n);
    if (!(dev6 < kCertificationTolerance)) {
        throw ConsistencyError("k = 3 certificate fails at k = 6 (deviation " +
                               std::to_string(dev6) + ")");
    }
    return rec;
}

SolutionRecord solve_k4(ReducedFraction delta_turns, ReducedFraction mn) {
    if (delta_turns != ReducedFraction(0, 1) && delta_turns != ReducedFraction(1, 4) &&
        delta_turns != ReducedFraction(1, 2) && delta_turns != ReducedFraction(3, 4)) {
        throw std::invalid_argument("k = 4 solver needs delta in {0, 1/4, 1/2, 3/4} turns, got " +
                                    delta_turns.to_string());
    }
    return solve_single_form(4, delta_turns, mn, CaseTag::kK4Family);
}

SolutionFamily scan_single_form(int k, ReducedFraction delta_turns, std::int64_t max_den,
                                std::int64_t max_n, CaseTag tag) {
    const DeltaForms forms = analyze_delta(k, delta_turns);
    if (forms.denominators.size() != 1) {
        throw std::invalid_argument("delta = " + delta_turns.to_string() +
                                    " does not reduce k = " + std::to_string(k) +
                                    " to a single rho form");
    }
    const double delta = delta_turns.radians();
    const double den = forms.denominators.front();
    SolutionFamily family{k, tag, delta_turns, {}};
    std::vector<std::vector<ReducedFraction>> seen;
    for_each_turn_fraction(max_den, [&](ReducedFraction x) {
        const double rho = form_numerator(x, delta) / den;
        if (!strictly_inside_unit(rho)) {
            return;
        }
        std::vector<ReducedFraction> gens = single_form_generators(forms, x);
        std::int64_t n;
        try {
            n = lcm_denominators(gens);
        } catch (const std::range_error&) {
            return;
        }
        if (n > max_n || std::find(seen.begin(), seen.end(), gens) != seen.end()) {
            return;
        }
        seen.push_back(gens);
        // rho from the smallest companion so repeats evaluate identically.
        const auto comps = companion_fractions(x, delta_turns);
        const double rho_canon = form_numerator(comps.front(), delta) / den;
        family.solutions.push_back(certify(k, rho_canon, delta_turns, std::move(gens), n, tag));
    });
    canonicalize(family.solutions);
    return family;
}

SolutionFamily solve_two_form(int k, ReducedFraction delta_turns, std::int64_t max_den,
                              std::int64_t max_n) {
    if (k != 5 && k != 8 && k != 10) {
        throw std::invalid_argument("two-form solver handles k in {5, 8, 10}, got " +
                                    std::to_string(k));
    }
    require_turn(delta_turns, "delta");
    const std::int64_t step = k == 8 ? 4 : 5;
    if (step % delta_turns.den() != 0) {
        throw std::invalid_argument("delta = " + delta_turns.to_string() +
                                    " turns is not a multiple of 1/" + std::to_string(step));
    }
    DeltaForms forms = analyze_delta(k, delta_turns);
    if (forms.denominators.size() != 2) {
        throw ConsistencyError("expected two rho forms for k = " + std::to_string(k));
    }
    // Primed form first: the larger denominator for k = 5, 10, the smaller for k = 8.
    std::array<int, 2> order = k == 8 ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};

    struct Candidate {
        double rho;
        int form;
        ReducedFraction x;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(reduced_count_upper_bound(max_den)));
    const double delta = delta_turns.radians();
    for_each_turn_fraction(max_den, [&](ReducedFraction x) {
        const double numer = form_numerator(x, delta);
        for (int f = 0; f < 2; ++f) {
            const double rho = numer / forms.denominators[order[f]];
            if (strictly_inside_unit(rho)) {
                candidates.push_back({rho, f, x});
            }
        }
    });
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.rho, a.form, a.x) < std::tie(b.rho, b.form, b.x);
    });

    const std::vector<ReducedFraction> constants = eliminated_phases(forms);
    SolutionFamily family{k, CaseTag::kTwoForm, delta_turns, {}};
    std::size_t i = 0;
    while (i < candidates.size()) {
        std::size_t j = i + 1;
        while (j < candidates.size() &&
               candidates[j].rho - candidates[j - 1].rho < kFormMatchTolerance) {
            ++j;
        }
        const std::size_t begin = std::exchange(i, j);
        const bool both = std::any_of(candidates.begin() + begin, candidates.begin() + j,
                                      [&](const Candidate& c) { return c.form != candidates[begin].form; });
        if (!both) {
            continue;
        }
        const double rho = candidates[begin].rho;
        std::array<std::vector<ReducedFraction>, 2> sets;
        for (std::size_t t = begin; t < j; ++t) {
            for (auto c : companion_fractions(candidates[t].x, delta_turns)) {
                sets[candidates[t].form].push_back(c);
            }
        }
        sort_unique(sets[0]);
        sort_unique(sets[1]);
        std::vector<ReducedFraction> gens = constants;
        gens.insert(gens.end(), sets[0].begin(), sets[0].end());
        gens.insert(gens.end(), sets[1].begin(), sets[1].end());
        sort_unique(gens);
        std::int64_t n;
        try {
            n = lcm_denominators(gens);
        } catch (const std::range_error&) {
            continue;
        }
        if (n > max_n) {
            continue;
        }
        const CoinParams params = CoinParams::from_delta(rho, delta_turns);
        const double dev = revival_deviation(k, params, n);
        if (!(dev < kCertificationTolerance)) {
            // Near-coincident rho values that are not an exact match.
            continue;
        }
        SolutionRecord rec;
        rec.certificate = RevivalCertificate{k, n, rho, params.delta(), std::move(gens), dev};
        rec.case_tag = CaseTag::kTwoForm;
        rec.delta_turns = delta_turns;
        rec.forms = {std::move(sets[0]), std::move(sets[1])};
        family.solutions.push_back(std::move(rec));
    }
    canonicalize(family.solutions);
    return family;
}

std::optional<SolutionRecord> solve_approximate(int k, double rho, double delta, double epsilon,
                                                std::int64_t max_n) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("approximate solutions need 0 < rho < 1");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    const CoinParams params = CoinParams::from_delta(rho, delta);

    struct Target {
        int block;
        double turn;  // eigenphase / 2pi in [0, 1)
        double den;   // 1 - cos(4 pi l/k + delta)
    };
    std::vector<Target> targets;
    std::vector<ReducedFraction> constants;
    for (int l = 0; l < k; ++l) {
        const double den = 1.0 - std::cos(4.0 * kPi * l / k + delta);
        if (std::abs(den) < kUndefinedRhoCutoff) {
            auto [a, b] = undefined_rho_phases(k, l);
            constants.push_back(a);
            constants.push_back(b);
            continue;
        }
        auto [a, b] = eigenvalues_closed_form(k, l, params);
        for (Complex z : {a, b}) {
            targets.push_back({l, principal_phase(z) / (2.0 * kPi), den});
        }
    }
    sort_unique(constants);

    auto rho_at = [&](const Target& t, double x) {
        return (1.0 - std::cos(4.0 * kPi * x - delta)) / t.den;
    };

    for (std::int64_t n = 1; n <= max_n; ++n) {
        bool ok = std::all_of(constants.begin(), constants.end(),
                              [&](ReducedFraction c) { return n % c.den() == 0; });
        if (!ok) {
            continue;
        }
        std::vector<ReducedFraction> gens = constants;
        for (const Target& t : targets) {
            const std::int64_t centre = std::llround(t.turn * static_cast<double>(n));
            std::optional<std::int64_t> best;
            double best_dist = 0.0;
            for (std::int64_t p = centre - 2; p <= centre + 2; ++p) {
                const double x = static_cast<double>(p) / static_cast<double>(n);
                if (std::abs(rho_at(t, x) - rho) > epsilon) {
                    continue;
                }
                const double dist = std::abs(x - t.turn);
                if (!best || dist < best_dist) {
                    best = p;
                    best_dist = dist;
                }
            }
            if (!best) {
                ok = false;
                break;
            }
            gens.push_back(ReducedFraction(*best, n).mod_one());
        }
        if (!ok) {
            continue;
        }
        sort_unique(gens);
        const std::int64_t lcm = lcm_denominators(gens);
        SolutionRecord rec;
        rec.certificate = RevivalCertificate{k, lcm, params.rho(), params.delta(), std::move(gens),
                                             identity_deviation(power_eigenphase(k, params, lcm))};
        rec.case_tag = CaseTag::kApproximate;
        return rec;
    }
    return std::nullopt;
}

}  // namespace qwalk
