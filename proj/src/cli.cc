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

#include "qwalk/cli.h"

#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/errors.h"
#include "qwalk/expr.h"
#include "qwalk/record.h"
#include "qwalk/solver.h"
#include "qwalk/spectral.h"
#include "qwalk/special_states.h"
#include "qwalk/tables.h"
#include "qwalk/walk.h"

namespace qwalk {

namespace {

using nlohmann::json;

/// Bad flag combinations detected after parsing; maps to kExitUsage.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Coin flags shared by most subcommands.
struct CoinFlags {
    std::string rho = "1/2";
    std::string alpha;
    std::string beta;
    std::string delta_frac;
    std::string delta_rad;

    void attach(CLI::App* app) {
        app->add_option("--rho", rho, "coin weight, e.g. 2/3 or (5-sqrt5)/8")->capture_default_str();
        app->add_option("--alpha", alpha, "coin phase alpha in radians (expression)");
        app->add_option("--beta", beta, "coin phase beta in radians (expression)");
        app->add_option("--delta-frac", delta_frac, "delta = alpha + beta as a fraction u/v of 2pi");
        app->add_option("--delta-rad", delta_rad, "delta in radians (expression)");
    }

    std::optional<ReducedFraction> delta_turns() const {
        if (delta_frac.empty()) return std::nullopt;
        ReducedFraction f = ReducedFraction::parse(delta_frac);
        if (f.num() < 0 || f.num() >= f.den()) {
            throw UsageError("--delta-frac " + delta_frac + " must lie in [0, 1)");
        }
        return f;
    }

    double rho_value() const { return evaluate_expression(rho); }

    CoinParams params() const {
        const int phase_modes = (!alpha.empty() || !beta.empty()) + !delta_frac.empty() + !delta_rad.empty();
        if (phase_modes > 1) {
            throw UsageError("give at most one of --alpha/--beta, --delta-frac, --delta-rad");
        }
        const double r = rho_value();
        if (auto d = delta_turns()) return CoinParams::from_delta(r, *d);
        if (!delta_rad.empty()) return CoinParams::from_delta(r, evaluate_expression(delta_rad));
        const double a = alpha.empty() ? 0.0 : evaluate_expression(alpha);
        const double b = beta.empty() ? 0.0 : evaluate_expression(beta);
        return CoinParams(r, a, b);
    }
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json delta_json(const std::optional<ReducedFraction>& turns, double radians) {
    if (turns) return {{"two_pi_num", turns->num()}, {"two_pi_den", turns->den()}};
    return {{"radians", radians}};
}

Complex parse_complex(const std::string& text) {
    // "re" or "re:im"; both parts are expressions.
    auto colon = text.find(':');
    if (colon == std::string::npos) return {evaluate_expression(text), 0.0};
    return {evaluate_expression(text.substr(0, colon)), evaluate_expression(text.substr(colon + 1))};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_complex(item));
    }
    return out;
}

CoinAmplitudes preset_amplitudes(const std::string& name) {
    if (name == "up0") return {Complex(1, 0), Complex(0, 0)};
    if (name == "symmetric") {
        const double h = std::numbers::sqrt2 / 2;
        return {Complex(h, 0), Complex(0, h)};
    }
    throw UsageError("unknown preset '" + name + "'");
}

bool is_preset(const std::string& s) { return s == "up0" || s == "symmetric"; }

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
    CoinFlags coin;
    int k = 0;
    int steps = 0;
    std::string initial = "up0";
    std::string out = "csv";
    bool line = false;
};

void write_csv_header(std::ostream& out) { out << "step,position,coin,re,im,prob\n"; }

void write_csv_row(std::ostream& out, std::int64_t step, int pos, int coin, Complex a, double prob) {
    out << step << ',' << pos << ',' << coin << ',' << a.real() << ',' << a.imag() << ',' << prob << '\n';
}

int cmd_simulate_line(const SimulateFlags& f, std::ostream& out) {
    const CoinParams params = f.coin.params();
    std::map<int, CoinAmplitudes> init;
    if (is_preset(f.initial)) {
        init[0] = preset_amplitudes(f.initial);
    } else {
        auto amps = parse_complex_list(f.initial);
        if (amps.size() != 2) throw UsageError("--line takes two amplitudes (up, down) at position 0");
        init[0] = {amps[0], amps[1]};
        const double norm = std::norm(amps[0]) + std::norm(amps[1]);
        if (std::abs(norm - 1.0) > 1e-12) throw std::domain_error("initial state is not normalized");
    }
    const auto traj = line_walk_trajectory(init, params, f.steps);
    if (f.out == "json") {
        json steps = json::array();
        for (std::size_t t = 0; t < traj.size(); ++t) {
            json amps = json::array(), probs = json::array();
            for (std::size_t i = 0; i < traj[t].sites.size(); ++i) {
                amps.push_back({complex_json(traj[t].sites[i][0]), complex_json(traj[t].sites[i][1])});
                probs.push_back(traj[t].probability(traj[t].first_position + static_cast<int>(i)));
            }
            steps.push_back({{"step", t}, {"first_position", traj[t].first_position},
                             {"amplitudes", amps}, {"probabilities", probs}});
        }
        out << json{{"mode", "line"}, {"steps", steps}}.dump() << '\n';
        return kExitOk;
    }
    write_csv_header(out);
    for (std::size_t t = 0; t < traj.size(); ++t) {
        const auto& d = traj[t];
        for (std::size_t i = 0; i < d.sites.size(); ++i) {
            const int pos = d.first_position + static_cast<int>(i);
            const double p = d.probability(pos);
            for (int c = 0; c < 2; ++c) write_csv_row(out, static_cast<std::int64_t>(t), pos, c, d.sites[i][c], p);
        }
    }
    return kExitOk;
}

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
    if (f.steps < 0) throw UsageError("--steps must be >= 0");
    if (f.out != "csv" && f.out != "json") throw UsageError("--out must be csv or json");
    if (f.line) return cmd_simulate_line(f, out);
    if (f.k < 2) throw UsageError("--k must be >= 2 on the cycle");
    const WalkOperator op = build_walk_operator(f.k, f.coin.params());
    Vector psi = Vector::Zero(2 * f.k);
    if (is_preset(f.initial)) {
        auto a = preset_amplitudes(f.initial);
        psi(basis_index(0, 0)) = a[0];
        psi(basis_index(0, 1)) = a[1];
    } else {
        auto amps = parse_complex_list(f.initial);
        if (static_cast<int>(amps.size()) != 2 * f.k) {
            throw UsageError("--initial needs 2k = " + std::to_string(2 * f.k) + " amplitudes");
        }
        for (int i = 0; i < 2 * f.k; ++i) psi(i) = amps[i];
        if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
            throw std::domain_error("initial state is not normalized (|psi|^2 = " +
                                    std::to_string(psi.squaredNorm()) + ")");
        }
    }
    WalkerState state = WalkerState::from_amplitudes(f.k, psi);

    json steps = json::array();
    if (f.out == "csv") write_csv_header(out);
    for (int t = 0; t <= f.steps; ++t) {
        if (t > 0) state = evolve_direct(state, op, 1);
        const auto probs = state.position_probabilities();
        if (f.out == "csv") {
            for (int pos = 0; pos < f.k; ++pos) {
                for (int c = 0; c < 2; ++c) {
                    write_csv_row(out, t, pos, c, state.amplitudes()(basis_index(pos, c)), probs[pos]);
                }
            }
        } else {
            json amps = json::array();
            for (int i = 0; i < 2 * f.k; ++i) amps.push_back(complex_json(state.amplitudes()(i)));
            steps.push_back({{"step", t}, {"amplitudes", amps}, {"probabilities", probs}});
        }
    }
    if (f.out == "json") out << json{{"mode", "cycle"}, {"k", f.k}, {"steps", steps}}.dump() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
    CoinFlags coin;
    int table = 0;
    int k = 0;
    std::int64_t n = 0;
    double tol = kCertificationTolerance;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
    json report;
    bool pass;
    if (f.table != 0) {
        if (f.k != 0 || f.n != 0) throw UsageError("--table excludes --k/--n");
        const TableReport r = verify_table(f.table, f.tol);
        json rows = json::array();
        for (const RowCheck& c : r.checks) {
            rows.push_back({{"k", c.k}, {"N", c.n}, {"rho", {{"value", c.rho}, {"expr", c.rho_expr}}},
                            {"delta", delta_json(c.delta_turns, c.delta_turns.radians())},
                            {"deviation", c.deviation}, {"pass", c.pass}});
        }
        pass = r.all_pass();
        report = {{"table", f.table}, {"tolerance", f.tol}, {"pass", pass},
                  {"max_deviation", r.max_deviation()}, {"rows", rows}};
    } else {
        if (f.k < 2 || f.n < 1) throw UsageError("give --table, or --k >= 2 and --n >= 1");
        const CoinParams params = f.coin.params();
        const double dev = revival_deviation(f.k, params, f.n);
        pass = dev < f.tol;
        report = {{"k", f.k}, {"N", f.n},
                  {"rho", {{"value", params.rho()}, {"expr", f.coin.rho}}},
                  {"delta", delta_json(f.coin.delta_turns(), params.delta())},
                  {"tolerance", f.tol}, {"deviation", dev}, {"pass", pass}};
    }
    out << report.dump() << '\n';
    return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
    CoinFlags coin;
    int k = 0;
    std::string which;
    std::string seed;
    std::int64_t max_den = kDefaultMaxDen;
    std::int64_t max_n = 0;  // 0: case default
    double epsilon = 1e-6;
    bool rho_given = false;
};

ReducedFraction require_delta(const SolveFlags& f) {
    auto d = f.coin.delta_turns();
    if (!d) throw UsageError("--case " + f.which + " needs --delta-frac");
    return *d;
}

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
    std::vector<SolutionRecord> records;
    const std::int64_t max_n = f.max_n > 0 ? f.max_n : kDefaultMaxDen;
    auto single = [&](int k, CaseTag tag) {
        const ReducedFraction d = require_delta(f);
        if (!f.seed.empty()) {
            SolutionRecord r = tag == CaseTag::kK3Family   ? solve_k3(d, ReducedFraction::parse(f.seed))
                               : tag == CaseTag::kK4Family ? solve_k4(d, ReducedFraction::parse(f.seed))
                                                           : solve_single_form(k, d, ReducedFraction::parse(f.seed), tag);
            records.push_back(std::move(r));
        } else {
            records = scan_single_form(k, d, f.max_den, max_n, tag).solutions;
        }
    };

    if (f.which == "rho-edge") {
        if (f.k < 2) throw UsageError("--k must be >= 2");
        const double r = f.coin.rho_value();
        if (r != 0.0 && r != 1.0) throw UsageError("--case rho-edge needs --rho 0 or --rho 1");
        records.push_back(solve_rho_edge(f.k, require_delta(f), static_cast<int>(r)));
    } else if (f.which == "k2") {
        if (f.k != 0 && f.k != 2) throw UsageError("--case k2 is for k = 2");
        if (!f.seed.empty()) {
            records.push_back(solve_k2(ReducedFraction::parse(f.seed), require_delta(f), f.max_den));
        } else {
            if (require_delta(f) != ReducedFraction(0, 1) || !f.rho_given) {
                throw UsageError("--case k2 needs --seed, or --delta-frac 0/1 with --rho");
            }
            records.push_back(solve_k2_free(f.coin.rho_value()));
        }
    } else if (f.which == "k3") {
        if (f.k != 0 && f.k != 3 && f.k != 6) throw UsageError("--case k3 is for k = 3 or 6");
        single(3, CaseTag::kK3Family);
    } else if (f.which == "k4") {
        if (f.k != 0 && f.k != 4) throw UsageError("--case k4 is for k = 4");
        single(4, CaseTag::kK4Family);
    } else if (f.which == "two-form") {
        records = solve_two_form(f.k, require_delta(f), f.max_den, max_n).solutions;
    } else if (f.which == "approx") {
        if (f.k < 2) throw UsageError("--k must be >= 2");
        const CoinParams p = f.coin.params();
        auto r = solve_approximate(f.k, p.rho(), p.delta(), f.epsilon,
                                   f.max_n > 0 ? f.max_n : kApproximateMaxN);
        if (!r) {
            err << "no approximate solution with N <= " << (f.max_n > 0 ? f.max_n : kApproximateMaxN) << '\n';
            return kExitFailure;
        }
        r->delta_turns = f.coin.delta_turns();
        records.push_back(std::move(*r));
    } else {
        throw UsageError("unknown --case '" + f.which + "'");
    }
    canonicalize(records);
    for (auto& r : records) {
        if (f.rho_given && !r.rho_expr) r.rho_expr = f.coin.rho;
        out << serialize_record(r) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- special

struct SpecialFlags {
    CoinFlags coin;
    int k = 0;
    std::int64_t period = 0;
    std::string coeffs;
    std::vector<int> blocks;
};

int cmd_special(const SpecialFlags& f, std::ostream& out, std::ostream& err) {
    if (f.k < 2 || f.period < 1) throw UsageError("--k >= 2 and --period >= 1 are required");
    const CoinParams params = f.coin.params();
    const EigenBasis basis = eigenbasis(f.k, params);
    auto sub = demoivre_subspace(basis, f.period);
    if (sub && !f.blocks.empty()) {
        std::erase_if(*sub, [&](const EigenEntry& e) {
            return std::find(f.blocks.begin(), f.blocks.end(), e.block) == f.blocks.end();
        });
        if (sub->empty()) sub.reset();
    }
    if (!sub) {
        err << "no eigenvalue of U_" << f.k << " is a " << f.period << "-th root of unity"
            << (f.blocks.empty() ? "" : " in the selected blocks") << '\n';
        return kExitFailure;
    }
    std::vector<Complex> coeffs = f.coeffs.empty() ? std::vector<Complex>(sub->size(), Complex(1, 0))
                                                   : parse_complex_list(f.coeffs);
    if (coeffs.size() != sub->size()) {
        throw UsageError("--coeffs needs " + std::to_string(sub->size()) + " entries");
    }
    const WalkerState psi = build_special_state(*sub, coeffs);
    const WalkOperator op = build_walk_operator(f.k, params);
    const auto fid = fidelity_scan(psi, op, f.period);

    json subspace = json::array();
    for (const EigenEntry& e : *sub) {
        subspace.push_back({{"block", e.block}, {"branch", e.branch > 0 ? "+" : "-"},
                            {"value", complex_json(e.value)},
                            {"phase_turns", principal_phase(e.value) / (2 * std::numbers::pi)},
                            {"degenerate", e.degenerate}});
    }
    json state = json::array();
    for (int i = 0; i < 2 * f.k; ++i) state.push_back(complex_json(psi.amplitudes()(i)));
    const bool ok = fid.back() > 1.0 - kCertificationTolerance;
    out << json{{"k", f.k}, {"period", f.period}, {"subspace", subspace}, {"state", state},
                {"fidelity", fid},
                {"full_revival_deviation", revival_deviation(f.k, params, f.period)},
                {"pass", ok}}.dump()
        << '\n';
    return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumFlags {
    CoinFlags coin;
    int k = 0;
    std::int64_t max_den = kDefaultMaxDen;
};

int cmd_spectrum(const SpectrumFlags& f, std::ostream& out) {
    if (f.k < 2) throw UsageError("--k must be >= 2");
    const CoinParams params = f.coin.params();
    auto entry = [&](Complex z) {
        const double phase = principal_phase(z);
        json j{{"value", complex_json(z)}, {"phase_turns", phase / (2 * std::numbers::pi)}};
        if (auto fr = reconstruct_fraction(phase, f.max_den, kPhaseTolerance)) {
            j["fraction"] = {{"num", fr->num()}, {"den", fr->den()}};
        }
        return j;
    };
    for (int l = 0; l < f.k; ++l) {
        const BranchEigenvalues br = eigenvalue_branches(f.k, l, params);
        out << json{{"block", l}, {"plus", entry(br.plus)}, {"minus", entry(br.minus)}}.dump() << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete-time quantum walks on cycles: simulation, spectra and revivals", "qwalk"};
    app.require_subcommand(1);

    SimulateFlags sim;
    auto* s = app.add_subcommand("simulate", "step a walker and print amplitudes per step");
    sim.coin.attach(s);
    s->add_option("--k", sim.k, "cycle length");
    s->add_option("--steps", sim.steps, "number of steps")->capture_default_str();
    s->add_option("--initial", sim.initial, "up0, symmetric, or comma list of re:im amplitudes")
        ->capture_default_str();
    s->add_option("--out", sim.out, "csv or json")->capture_default_str();
    s->add_flag("--line", sim.line, "walk on the infinite line instead of a cycle");

    VerifyFlags ver;
    auto* v = app.add_subcommand("verify", "check U^N = I for a table or a single parameter set");
    ver.coin.attach(v);
    v->add_option("--table", ver.table, "published solution table 1..5");
    v->add_option("--k", ver.k, "cycle length");
    v->add_option("--n", ver.n, "revival step count N");
    v->add_option("--tol", ver.tol, "max |U^N - I| accepted")->capture_default_str();

    SolveFlags sol;
    auto* so = app.add_subcommand("solve", "search for exact (N, rho, delta) revivals");
    sol.coin.attach(so);
    so->add_option("--k", sol.k, "cycle length");
    so->add_option("--case", sol.which, "rho-edge, k2, k3, k4, two-form or approx")->required();
    so->add_option("--seed", sol.seed, "seed fraction m/n");
    so->add_option("--max-den", sol.max_den, "largest fraction denominator searched")->capture_default_str();
    so->add_option("--max-n", sol.max_n, "largest period accepted");
    so->add_option("--epsilon", sol.epsilon, "rho tolerance for --case approx")->capture_default_str();

    SpecialFlags spe;
    auto* sp = app.add_subcommand("special", "build a state that revives although U^N != I");
    spe.coin.attach(sp);
    sp->add_option("--k", spe.k, "cycle length");
    sp->add_option("--period", spe.period, "target revival period");
    sp->add_option("--coeffs", spe.coeffs, "comma list of re:im weights (default: equal)");
    sp->add_option("--blocks", spe.blocks, "restrict to these Fourier blocks")->delimiter(',');

    SpectrumFlags spc;
    auto* sc = app.add_subcommand("spectrum", "closed-form eigenvalues block by block");
    spc.coin.attach(sc);
    sc->add_option("--k", spc.k, "cycle length");
    sc->add_option("--max-den", spc.max_den, "denominator bound for fraction detection")
        ->capture_default_str();

    std::vector<const char*> argv{"qwalk"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    out << std::setprecision(17);
    try {
        if (s->parsed()) return cmd_simulate(sim, out);
        if (v->parsed()) return cmd_verify(ver, out);
        if (so->parsed()) {
            sol.rho_given = so->count("--rho") > 0;
            return cmd_solve(sol, out, err);
        }
        if (sp->parsed()) return cmd_special(spe, out, err);
        if (sc->parsed()) return cmd_spectrum(spc, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qwalk
