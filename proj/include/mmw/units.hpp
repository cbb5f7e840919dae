// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mmwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmw {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Carrier frequency. Stored in Hz; the path-loss models disagree on units
/// (CI wants Hz, ABG and the material models want GHz) so callers pick the
/// accessor explicitly.
class Frequency {
public:
    constexpr Frequency() = default;

    static constexpr Frequency hz(double value) { return Frequency(value); }
    static constexpr Frequency ghz(double value) { return Frequency(value * 1e9); }

    constexpr double in_hz() const { return hz_; }
    constexpr double in_ghz() const { return hz_ * 1e-9; }

    constexpr auto operator<=>(const Frequency&) const = default;

private:
    constexpr explicit Frequency(double hz) : hz_(hz) {}
    double hz_ = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    static Vec2 polar(double radius, double angle_deg) {
        const double a = angle_deg * std::numbers::pi / 180.0;
        return {radius * std::cos(a), radius * std::sin(a)};
    }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Raised for scenario/configuration problems. `field()` names the
/// offending configuration key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when a link budget produces a non-finite quantity.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mmw
