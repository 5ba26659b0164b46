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

#include "qwalk/fraction.h"

#include <charconv>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwalk {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::range_error("integer overflow in fraction arithmetic");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::range_error("integer overflow in fraction arithmetic");
    }
    return out;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

ReducedFraction::ReducedFraction(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("fraction with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

double ReducedFraction::radians() const {
    return 2.0 * std::numbers::pi * value();
}

ReducedFraction ReducedFraction::mod_one() const {
    std::int64_t r = num_ % den_;
    if (r < 0) {
        r += den_;
    }
    return ReducedFraction(r, den_);
}

ReducedFraction ReducedFraction::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ReducedFraction(parse_int(text), 1);
    }
    return ReducedFraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string ReducedFraction::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

ReducedFraction operator+(ReducedFraction a, ReducedFraction b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return ReducedFraction(num, checked_mul(a.den_ / g, b.den_));
}

ReducedFraction operator-(ReducedFraction a) {
    return ReducedFraction(-a.num_, a.den_);
}

ReducedFraction operator-(ReducedFraction a, ReducedFraction b) {
    return a + (-b);
}

ReducedFraction operator*(ReducedFraction a, ReducedFraction b) {
    ReducedFraction x(a.num_, b.den_);
    ReducedFraction y(b.num_, a.den_);
    return ReducedFraction(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
}

std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) {
        throw std::invalid_argument("lcm of non-positive integer");
    }
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_denominators(std::span<const ReducedFraction> fractions,
                              std::span<const std::int64_t> extra) {
    if (fractions.empty() && extra.empty()) {
        throw std::invalid_argument("lcm of an empty set");
    }
    std::int64_t acc = 1;
    for (const auto& f : fractions) {
        acc = checked_lcm(acc, f.den());
    }
    for (std::int64_t n : extra) {
        acc = checked_lcm(acc, n);
    }
    return acc;
}

}  // namespace qwalk
