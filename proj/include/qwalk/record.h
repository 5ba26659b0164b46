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

#include <string>
#include <string_view>

#include "qwalk/solver.h"

namespace qwalk {

/// One-line JSON for a solution:
///   {"k", "N", "rho": {"value", "expr"?}, "delta": {"two_pi_num", "two_pi_den"}
///    or {"radians"}, "generators": [{"num", "den"}], "max_deviation",
///    "case_tag", "forms"?: [[{"num", "den"}], ...]}
/// Doubles are written in shortest round-trip form, so parse(serialize(r))
/// reproduces r exactly.
std::string serialize_record(const SolutionRecord& record);

/// Throws std::invalid_argument on malformed or incomplete input.
SolutionRecord parse_record(std::string_view line);

}  // namespace qwalk
