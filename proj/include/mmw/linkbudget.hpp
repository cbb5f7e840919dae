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

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mmw/units.hpp"

namespace mmw {

/// One BS-sector -> MS link. All quantities in dB / dBi / dBm / m.
struct LinkRecord {
    int ms_id = 0;
    int sector_id = 0;
    double d_2d_m = 0.0;
    double d_3d_m = 0.0;
    bool is_los = false;
    double pl_db = 0.0;
    double l_o2i_db = 0.0;
    double l_oa_db = 0.0;
    double g_tx_dbi = 0.0;
    double g_rx_dbi = 0.0;
    double g_sm_db = 0.0;
    double coupling_loss_db = 0.0;
    double p_rx_dbm = 0.0;
};

enum class PowerScheme { scaled, constant };

std::string_view to_string(PowerScheme scheme);
PowerScheme power_scheme_from_string(std::string_view s);

struct PowerAllocation {
    PowerScheme scheme = PowerScheme::scaled;
    Frequency fc;
    double bandwidth_hz = 0.0;
    double p_tx_dbm = 0.0;
};

struct PowerTableRow {
    double fc_ghz;
    double bandwidth_hz;
    double scaled_p_tx_dbm;
};

/// Bandwidth and transmit power per standard carrier. The constant scheme
/// uses the same bandwidths at `kConstantTxPowerDbm`.
std::span<const PowerTableRow> standard_power_table();
inline constexpr double kConstantTxPowerDbm = 44.0;

/// Throws ConfigError for a carrier not in the standard table.
PowerAllocation power_allocation(PowerScheme scheme, Frequency fc);

inline constexpr double kThermalNoiseDbmPerHz = -174.0;

double noise_power(double bandwidth_hz, double noise_figure_db, double density_dbm_per_hz = kThermalNoiseDbmPerHz);

struct CouplingTerms {
    double g_tx_dbi = 0.0;
    double g_rx_dbi = 0.0;
    double pl_db = 0.0;
    double l_o2i_db = 0.0;
    double l_oa_db = 0.0;
    double g_sm_db = 0.0;
};

/// CL = G_tx + G_rx - (PL + L_o2i + L_oa - G_sm).
double coupling_loss(const CouplingTerms& t);

/// Coupling loss at which received power equals the noise power.
inline double cl_snr0_threshold(double p_tx_dbm, double noise_total_dbm) { return noise_total_dbm - p_tx_dbm; }

/// Serving sector: largest coupling loss, lowest sector id on ties.
int associate(std::span<const LinkRecord> links);

/// Column order of the link dump.
inline constexpr std::string_view kLinkCsvHeader =
    "ms_id,sector_id,d_2D,d_3D,is_los,pl,l_o2i,l_oa,g_tx,g_sm,coupling_loss,p_rx";

void write_link_csv_row(std::ostream& os, const LinkRecord& link);

}  // namespace mmw
