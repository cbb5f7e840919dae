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

#include "mmw/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace mmw {

namespace {

void require_positive_frequency(Frequency fc) {
    if (!(fc.in_hz() > 0.0)) throw std::domain_error("carrier frequency must be positive");
}

void require_reference_distance(double d_m) {
    if (!(d_m >= 1.0)) {
        throw std::domain_error("distance " + std::to_string(d_m) + " m is below the 1 m reference distance");
    }
}

}  // namespace

double PropagationParams::sigma_o2i_low_db() const {
    return o2i_spread_reading == O2iSpreadReading::variance ? std::sqrt(o2i_spread_low) : o2i_spread_low;
}

double PropagationParams::sigma_o2i_high_db() const {
    return o2i_spread_reading == O2iSpreadReading::variance ? std::sqrt(o2i_spread_high) : o2i_spread_high;
}

bool in_validity_range(Frequency fc) {
    const double g = fc.in_ghz();
    return g >= kValidityMinGhz && g <= kValidityMaxGhz;
}

double fspl(Frequency fc) {
    require_positive_frequency(fc);
    return 20.0 * std::log10(4.0 * std::numbers::pi * fc.in_hz() / kSpeedOfLight);
}

LossDb pl_los_ci(Frequency fc, double d_m, double x_los_db, const PropagationParams& params) {
    require_positive_frequency(fc);
    require_reference_distance(d_m);
    return {fspl(fc) + params.ci_ple_coeff * std::log10(d_m) + x_los_db, !in_validity_range(fc)};
}

LossDb pl_nlos_abg(Frequency fc, double d_m, double x_nlos_db, const PropagationParams& params) {
    require_positive_frequency(fc);
    require_reference_distance(d_m);
    const double db = 10.0 * params.abg_alpha * std::log10(d_m) + params.abg_beta_db +
                      10.0 * params.abg_gamma * std::log10(fc.in_ghz()) + x_nlos_db;
    return {db, !in_validity_range(fc)};
}

double los_probability(double d_2d_m) {
    if (!(d_2d_m >= 0.0)) throw std::domain_error("2D distance must be non-negative");
    const double e = std::exp(-d_2d_m / 36.0);
    const double near = d_2d_m <= 18.0 ? 1.0 : 18.0 / d_2d_m;
    return near * (1.0 - e) + e;
}

Material material_from_string(std::string_view name) {
    if (name == "glass") return Material::glass;
    if (name == "irr_glass") return Material::irr_glass;
    if (name == "concrete") return Material::concrete;
    throw std::domain_error("unknown material '" + std::string(name) + "'");
}

double material_loss(Material material, Frequency fc, const MaterialCoefficients& c) {
    require_positive_frequency(fc);
    const double f = fc.in_ghz();
    switch (material) {
        case Material::glass: return c.glass_intercept_db + c.glass_slope_db_per_ghz * f;
        case Material::irr_glass: return c.irr_glass_intercept_db + c.irr_glass_slope_db_per_ghz * f;
        case Material::concrete: return c.concrete_intercept_db + c.concrete_slope_db_per_ghz * f;
    }
    throw std::domain_error("unknown material");
}

O2iLoss o2i_loss(Frequency fc, double d_2d_in_m, double x_low_db, double x_high_db,
                 const PropagationParams& params) {
    if (!(d_2d_in_m >= 0.0)) throw std::domain_error("indoor distance must be non-negative");
    const auto& m = params.materials;
    const double l_g = material_loss(Material::glass, fc, m);
    const double l_irr = material_loss(Material::irr_glass, fc, m);
    const double l_c = material_loss(Material::concrete, fc, m);

    // Transmission through a wall is a power-weighted mix of its materials;
    // concrete at high frequency underflows harmlessly to 0.
    auto through = [](double w1, double loss1, double w2, double loss2) {
        return -10.0 * std::log10(w1 * std::pow(10.0, -loss1 / 10.0) + w2 * std::pow(10.0, -loss2 / 10.0));
    };

    O2iLoss out;
    out.low_db = 5.0 + through(0.3, l_g, 0.7, l_c) + x_low_db;
    out.high_db = 5.0 + through(0.7, l_irr, 0.3, l_c) + x_high_db;
    // Factor the larger term out of the power sum so 10^(L/10) never overflows.
    const double hi = std::max(out.low_db, out.high_db);
    out.wall_db = hi + 10.0 * std::log10(0.5 * std::pow(10.0, (out.low_db - hi) / 10.0) +
                                          0.5 * std::pow(10.0, (out.high_db - hi) / 10.0));
    out.in_building_db = params.indoor_loss_db_per_m * d_2d_in_m;
    out.total_db = out.wall_db + out.in_building_db;
    return out;
}

double oxygen_absorption(Frequency fc, double d_m, const PropagationParams& params) {
    if (!(d_m >= 0.0)) throw std::domain_error("distance must be non-negative");
    if (!params.oxygen_enabled) return 0.0;
    const double g = fc.in_ghz();
    for (const auto& [f_ghz, rate] : params.oxygen_db_per_km) {
        if (std::abs(f_ghz - g) < 1e-6) return rate * d_m / 1000.0;
    }
    return 0.0;
}

UnitShadows draw_unit_shadows(Engine& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    UnitShadows z;
    z.z_los = n01(rng);
    z.z_nlos = n01(rng);
    z.z_o2i_low = n01(rng);
    z.z_o2i_high = n01(rng);
    return z;
}

ShadowDraws scale_shadows(const UnitShadows& z, const PropagationParams& params) {
    return {z.z_los * params.sigma_los_db, z.z_nlos * params.sigma_nlos_db,
            z.z_o2i_low * params.sigma_o2i_low_db(), z.z_o2i_high * params.sigma_o2i_high_db()};
}

LinkLoss link_loss(const LinkGeometry& geom, const ShadowDraws& draws, double g_sm_db,
                   const PropagationParams& params) {
    if (!(geom.d_3d_m >= geom.d_2d_m) || !(geom.d_2d_m >= 0.0)) {
        throw std::domain_error("inconsistent link geometry: need d_3d >= d_2d >= 0");
    }
    const LossDb pl = geom.is_los ? pl_los_ci(geom.fc, geom.d_3d_m, draws.x_los_db, params)
                                  : pl_nlos_abg(geom.fc, geom.d_3d_m, draws.x_nlos_db, params);
    LinkLoss out;
    out.pl_db = pl.db;
    out.outside_validity = pl.outside_validity;
    if (geom.is_indoor) {
        out.o2i_db = o2i_loss(geom.fc, geom.d_2d_in_m, draws.x_o2i_low_db, draws.x_o2i_high_db, params).total_db;
    }
    out.oa_db = oxygen_absorption(geom.fc, geom.d_3d_m, params);
    out.g_sm_db = g_sm_db;
    out.total_db = out.pl_db + out.o2i_db + out.oa_db - out.g_sm_db;
    return out;
}

}  // namespace mmw
