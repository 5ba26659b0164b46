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

#include <string_view>

namespace qwalk {

/// Evaluates a closed-form real expression such as "(5-sqrt5)/8" or
/// "2/3*(1-sin(7*pi/30))".
///
/// Grammar: numbers, + - * / ^ (right associative), unary minus, parentheses,
/// the constant pi, sqrt5 as shorthand for sqrt(5), and the functions sqrt,
/// sin, cos. Throws std::invalid_argument on malformed input or a negative
/// square root.
double evaluate_expression(std::string_view text);

}  // namespace qwalk
