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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace qwalk {

/// Exact coprime pair num/den with den >= 1.
///
/// Used for eigenphases (fractions of a full turn, e^{2 pi i num/den}) and
/// for coin phases delta = 2 pi num/den. Construction always reduces; the
/// sign lives in the numerator. `mod_one()` maps onto the canonical phase
/// range [0, 1).
class ReducedFraction {
 public:
  constexpr ReducedFraction() = default;
  ReducedFraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// 2 pi times the value, reduced into [0, 2 pi) when the fraction is.
  double radians() const;

  ReducedFraction mod_one() const;

  /// Parses "m/n" or a bare integer "m".
  static ReducedFraction parse(std::string_view text);
  std::string to_string() const;

  friend ReducedFraction operator+(ReducedFraction a, ReducedFraction b);
  friend ReducedFraction operator-(ReducedFraction a, ReducedFraction b);
  friend ReducedFraction operator-(ReducedFraction a);
  friend ReducedFraction operator*(ReducedFraction a, ReducedFraction b);

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
  friend std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Checked lcm. Throws std::range_error on int64 overflow.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

/// Least common multiple of every denominator in `fractions` and every value
/// in `extra`. Throws std::invalid_argument when both are empty and
/// std::range_error on overflow.
std::int64_t lcm_denominators(std::span<const ReducedFraction> fractions,
                              std::span<const std::int64_t> extra = {});

}  // namespace qwalk
