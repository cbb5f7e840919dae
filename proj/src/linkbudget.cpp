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

#include "mmw/linkbudget.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mmw {

namespace {

constexpr std::array<PowerTableRow, 5> kPowerTable = {{
    {2.0, 20e6, 44.0},
    {10.0, 300e6, 55.8},
    {30.0, 500e6, 58.0},
    {60.0, 1000e6, 61.0},
    {100.0, 2000e6, 64.0},
}};

}  // namespace

std::string_view to_string(PowerScheme scheme) { return scheme == PowerScheme::scaled ? "scaled" : "constant"; }

PowerScheme power_scheme_from_string(std::string_view s) {
    if (s == "scaled") return PowerScheme::scaled;
    if (s == "constant") return PowerScheme::constant;
    throw ConfigError("power_scheme", "expected 'scaled' or 'constant', got '" + std::string(s) + "'");
}

std::span<const PowerTableRow> standard_power_table() { return kPowerTable; }

PowerAllocation power_allocation(PowerScheme scheme, Frequency fc) {
    for (const PowerTableRow& row : kPowerTable) {
        if (std::abs(row.fc_ghz - fc.in_ghz()) < 1e-6) {
            return {scheme, fc, row.bandwidth_hz,
                    scheme == PowerScheme::scaled ? row.scaled_p_tx_dbm : kConstantTxPowerDbm};
        }
    }
    throw ConfigError("frequency_ghz", "no standard bandwidth/power entry for " + std::to_string(fc.in_ghz()) +
                                           " GHz; set link_budget.bandwidth_hz and link_budget.p_tx_dbm");
}

double noise_power(double bandwidth_hz, double noise_figure_db, double density_dbm_per_hz) {
    if (!(bandwidth_hz > 0.0)) throw std::domain_error("bandwidth must be positive");
    return density_dbm_per_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double coupling_loss(const CouplingTerms& t) {
    return t.g_tx_dbi + t.g_rx_dbi - (t.pl_db + t.l_o2i_db + t.l_oa_db - t.g_sm_db);
}

int associate(std::span<const LinkRecord> links) {
    if (links.empty()) throw std::logic_error("associate: empty link set");
    const LinkRecord* best = &links.front();
    for (const LinkRecord& l : links) {
        if (l.coupling_loss_db > best->coupling_loss_db ||
            (l.coupling_loss_db == best->coupling_loss_db && l.sector_id < best->sector_id)) {
            best = &l;
        }
    }
    return best->sector_id;
}

void write_link_csv_row(std::ostream& os, const LinkRecord& l) {
    char buf[320];
    std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", l.ms_id, l.sector_id,
                  l.d_2d_m, l.d_3d_m, l.is_los ? 1 : 0, l.pl_db, l.l_o2i_db, l.l_oa_db, l.g_tx_dbi, l.g_sm_db,
                  l.coupling_loss_db, l.p_rx_dbm);
    os << buf;
}

}  // namespace mmw
