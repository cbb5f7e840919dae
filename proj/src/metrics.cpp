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

#include "mmw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mmw {

std::string_view to_string(Regime regime) {
    return regime == Regime::noise_limited ? "noise_limited" : "interference_limited";
}

double geometry_metric(std::span<const LinkRecord> links, int serving_sector, double noise_total_dbm) {
    if (links.size() < 2) throw std::logic_error("geometry_metric: need a serving link and at least one other");
    double signal_mw = 0.0;
    double interference_mw = 0.0;
    bool found = false;
    for (const LinkRecord& l : links) {
        const double p = db_to_linear(l.p_rx_dbm);
        if (l.sector_id == serving_sector && !found) {
            signal_mw = p;
            found = true;
        } else {
            interference_mw += p;
        }
    }
    if (!found) throw std::logic_error("geometry_metric: serving sector " + std::to_string(serving_sector) + " absent");
    return linear_to_db(signal_mw / (db_to_linear(noise_total_dbm) + interference_mw));
}

CdfSeries::CdfSeries(std::vector<double> samples) : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double CdfSeries::fraction_below(double x) const {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double CdfSeries::percentile(double p) const {
    if (sorted_.empty()) throw std::logic_error("percentile of empty series");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("percentile outside [0, 1]");
    const auto n = static_cast<double>(sorted_.size());
    // Smallest k with k / n >= p; ceil(p * n) can overshoot by one in floating point.
    auto k = static_cast<std::size_t>(std::ceil(p * n));
    while (k > 1 && static_cast<double>(k - 1) / n >= p) --k;
    k = std::clamp<std::size_t>(k, 1, sorted_.size());
    return sorted_[k - 1];
}

CdfSeries empirical_cdf(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf: no samples");
    for (double s : samples) {
        if (!std::isfinite(s)) throw std::invalid_argument("empirical_cdf: non-finite sample");
    }
    return CdfSeries(std::vector<double>(samples.begin(), samples.end()));
}

void write_cdf_csv(std::ostream& os, const CdfSeries& cdf) {
    os << "value_dB,cdf\n";
    const auto s = cdf.samples();
    const auto n = static_cast<double>(s.size());
    char buf[64];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f,%.8f\n", s[i], static_cast<double>(i + 1) / n);
        os << buf;
    }
}

nlohmann::json cdf_summary(const CdfSeries& cdf) {
    nlohmann::json pct = nlohmann::json::object();
    for (int p : kSummaryPercentiles) pct[std::to_string(p)] = cdf.percentile(p / 100.0);
    return {{"n", cdf.size()}, {"percentiles", pct}, {"fraction_below_0dB", cdf.fraction_below(0.0)}};
}

}  // namespace mmw
