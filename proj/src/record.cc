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

#include "qwalk/record.h"

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

json fraction_list(const std::vector<ReducedFraction>& fs) {
    json out = json::array();
    for (const auto& f : fs) {
        out.push_back({{"num", f.num()}, {"den", f.den()}});
    }
    return out;
}

std::vector<ReducedFraction> parse_fraction_list(const json& j) {
    std::vector<ReducedFraction> out;
    for (const auto& e : j) {
        out.emplace_back(e.at("num").get<std::int64_t>(), e.at("den").get<std::int64_t>());
    }
    return out;
}

}  // namespace

std::string serialize_record(const SolutionRecord& r) {
    const RevivalCertificate& c = r.certificate;
    json j;
    j["k"] = c.k;
    j["N"] = c.n;
    j["rho"] = {{"value", c.rho}};
    if (r.rho_expr) {
        j["rho"]["expr"] = *r.rho_expr;
    }
    if (r.delta_turns) {
        j["delta"] = {{"two_pi_num", r.delta_turns->num()}, {"two_pi_den", r.delta_turns->den()}};
    } else {
        j["delta"] = {{"radians", c.delta}};
    }
    j["generators"] = fraction_list(c.generators);
    j["max_deviation"] = c.max_deviation;
    j["case_tag"] = std::string(case_tag_name(r.case_tag));
    if (!r.forms.empty()) {
        json forms = json::array();
        for (const auto& f : r.forms) forms.push_back(fraction_list(f));
        j["forms"] = std::move(forms);
    }
    return j.dump();
}

SolutionRecord parse_record(std::string_view line) {
    try {
        const json j = json::parse(line);
        SolutionRecord r;
        RevivalCertificate& c = r.certificate;
        c.k = j.at("k").get<int>();
        c.n = j.at("N").get<std::int64_t>();
        c.rho = j.at("rho").at("value").get<double>();
        if (j["rho"].contains("expr")) {
            r.rho_expr = j["rho"]["expr"].get<std::string>();
        }
        const json& d = j.at("delta");
        if (d.contains("two_pi_num")) {
            r.delta_turns = ReducedFraction(d.at("two_pi_num").get<std::int64_t>(),
                                            d.at("two_pi_den").get<std::int64_t>());
            c.delta = r.delta_turns->radians();
        } else {
            c.delta = d.at("radians").get<double>();
        }
        c.generators = parse_fraction_list(j.at("generators"));
        c.max_deviation = j.at("max_deviation").get<double>();
        const std::string tag = j.at("case_tag").get<std::string>();
        auto parsed = parse_case_tag(tag);
        if (!parsed) {
            throw std::invalid_argument("unknown case_tag '" + tag + "'");
        }
        r.case_tag = *parsed;
        if (j.contains("forms")) {
            for (const auto& f : j["forms"]) r.forms.push_back(parse_fraction_list(f));
        }
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad solution record: ") + e.what());
    }
}

}  // namespace qwalk
