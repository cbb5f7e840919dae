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

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mmw/linkbudget.hpp"

namespace mmw {

enum class Regime { noise_limited, interference_limited };

std::string_view to_string(Regime regime);

/// Noise-limited strictly below the threshold; the boundary counts as
/// interference-limited.
inline Regime classify_regime(double coupling_loss_db, double threshold_db) {
    return coupling_loss_db < threshold_db ? Regime::noise_limited : Regime::interference_limited;
}

struct GeometryResult {
    int ms_id = 0;
    double gm_db = 0.0;
    int serving_sector = 0;
    Regime regime = Regime::interference_limited;
};

/// Long-term SINR of the serving link against noise plus every other
/// sector, in dB. Powers are summed in mW.
double geometry_metric(std::span<const LinkRecord> links, int serving_sector, double noise_total_dbm);

/// Sorted empirical distribution.
class CdfSeries {
public:
    CdfSeries() = default;
    explicit CdfSeries(std::vector<double> samples);

    std::span<const double> samples() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }

    /// |{s <= x}| / n
    double fraction_below(double x) const;
    /// Smallest sample s with fraction_below(s) >= p, p in [0, 1].
    double percentile(double p) const;
    double median() const { return percentile(0.5); }

    bool operator==(const CdfSeries&) const = default;

private:
    std::vector<double> sorted_;
};

/// Throws std::invalid_argument on empty input or non-finite samples.
CdfSeries empirical_cdf(std::span<const double> samples);

inline constexpr std::array<int, 8> kSummaryPercentiles = {5, 20, 35, 48, 50, 75, 90, 95};

/// Two columns, value_dB and cdf, one row per sample.
void write_cdf_csv(std::ostream& os, const CdfSeries& cdf);

/// Percentiles at kSummaryPercentiles plus fraction_below(0 dB).
nlohmann::json cdf_summary(const CdfSeries& cdf);

}  // namespace mmw
