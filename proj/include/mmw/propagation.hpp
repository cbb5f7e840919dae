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

#include <map>
#include <string_view>

#include "mmw/rng.hpp"
#include "mmw/units.hpp"

namespace mmw {

/// Linear-in-frequency wall material losses, L = intercept + slope * f_GHz.
struct MaterialCoefficients {
    double glass_intercept_db = 2.0;
    double glass_slope_db_per_ghz = 0.2;
    double irr_glass_intercept_db = 23.0;
    double irr_glass_slope_db_per_ghz = 0.3;
    double concrete_intercept_db = 5.0;
    double concrete_slope_db_per_ghz = 4.0;
};

/// How the configured O2I spread values are interpreted.
enum class O2iSpreadReading {
    variance,  // sigma = sqrt(value)
    stddev,    // sigma = value
};

struct PropagationParams {
    // Close-in LoS model: FSPL(f) + ci_ple_coeff * log10(d).
    double ci_ple_coeff = 21.0;
    double sigma_los_db = 3.76;

    // Alpha-beta-gamma NLoS model.
    double abg_alpha = 3.53;
    double abg_beta_db = 22.4;
    double abg_gamma = 2.13;
    double sigma_nlos_db = 7.82;

    double o2i_spread_low = 3.0;
    double o2i_spread_high = 5.0;
    O2iSpreadReading o2i_spread_reading = O2iSpreadReading::variance;
    double indoor_loss_db_per_m = 0.5;
    MaterialCoefficients materials;

    /// Oxygen absorption rate keyed by carrier frequency in GHz; frequencies
    /// not listed absorb nothing.
    std::map<double, double> oxygen_db_per_km = {{60.0, 15.0}};
    bool oxygen_enabled = true;

    double sigma_o2i_low_db() const;
    double sigma_o2i_high_db() const;
};

inline constexpr double kValidityMinGhz = 0.5;
inline constexpr double kValidityMaxGhz = 100.0;

bool in_validity_range(Frequency fc);

/// A loss in dB plus a flag raised when the carrier lies outside the
/// 0.5-100 GHz range the models were fitted over. Out-of-range is a warning
/// rather than an error so that sweeps can run past the edges.
struct LossDb {
    double db = 0.0;
    bool outside_validity = false;
};

double fspl(Frequency fc);

LossDb pl_los_ci(Frequency fc, double d_m, double x_los_db, const PropagationParams& params = {});
LossDb pl_nlos_abg(Frequency fc, double d_m, double x_nlos_db, const PropagationParams& params = {});

double los_probability(double d_2d_m);

enum class Material { glass, irr_glass, concrete };

Material material_from_string(std::string_view name);
double material_loss(Material material, Frequency fc, const MaterialCoefficients& coeffs = {});

struct O2iLoss {
    double low_db = 0.0;          // low-loss composite wall, shadow included
    double high_db = 0.0;         // high-loss composite wall, shadow included
    double wall_db = 0.0;         // 50/50 power mix of the two
    double in_building_db = 0.0;
    double total_db = 0.0;
};

O2iLoss o2i_loss(Frequency fc, double d_2d_in_m, double x_low_db, double x_high_db,
                 const PropagationParams& params = {});

double oxygen_absorption(Frequency fc, double d_m, const PropagationParams& params = {});

struct LinkGeometry {
    double d_2d_m = 0.0;
    double d_3d_m = 0.0;
    Frequency fc;
    bool is_los = false;
    bool is_indoor = false;
    double d_2d_in_m = 0.0;
};

struct ShadowDraws {
    double x_los_db = 0.0;
    double x_nlos_db = 0.0;
    double x_o2i_low_db = 0.0;
    double x_o2i_high_db = 0.0;
};

/// Standard-normal variates for one MS-site pair. Scaled by the configured
/// sigmas in `scale_shadows`, so every frequency and parameter set sees the
/// same underlying numbers for a given stream.
struct UnitShadows {
    double z_los = 0.0;
    double z_nlos = 0.0;
    double z_o2i_low = 0.0;
    double z_o2i_high = 0.0;
};

UnitShadows draw_unit_shadows(Engine& rng);
ShadowDraws scale_shadows(const UnitShadows& z, const PropagationParams& params);

struct LinkLoss {
    double pl_db = 0.0;
    double o2i_db = 0.0;
    double oa_db = 0.0;
    double g_sm_db = 0.0;
    double total_db = 0.0;  // pl + o2i + oa - g_sm
    bool outside_validity = false;
};

LinkLoss link_loss(const LinkGeometry& geom, const ShadowDraws& draws, double g_sm_db,
                   const PropagationParams& params = {});

}  // namespace mmw
