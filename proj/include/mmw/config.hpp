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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmw/antenna.hpp"
#include "mmw/deployment.hpp"
#include "mmw/linkbudget.hpp"
#include "mmw/propagation.hpp"

namespace mmw {

struct LinkBudgetParams {
    double noise_density_dbm_per_hz = kThermalNoiseDbmPerHz;
    double noise_figure_db = 9.0;
    double ms_gain_dbi = 0.0;
    double g_sm_db = 0.0;
    // Required for carriers outside the standard table; override it otherwise.
    std::optional<double> bandwidth_hz;
    std::optional<double> p_tx_dbm;
};

/// Full description of one experiment. Defaults describe the UMi reference
/// scenario; nothing in the run path hard-codes them.
struct ScenarioConfig {
    double frequency_ghz = 2.0;
    PowerScheme power_scheme = PowerScheme::scaled;
    Environment environment = Environment::outdoor;
    int n_drops = 20;
    int ms_per_sector = 10;
    std::uint64_t seed = 1;
    bool oxygen_absorption = true;

    LinkBudgetParams link_budget;
    PropagationParams propagation;
    AntennaPattern antenna;
    DeploymentParams deployment;

    Frequency carrier() const { return Frequency::ghz(frequency_ghz); }
    int ms_per_drop() const { return ms_per_sector * kNumSectors; }
};

/// Throws ConfigError naming the first offending field. Returns non-fatal
/// warnings (e.g. carrier outside the models' fitted range).
std::vector<std::string> validate(const ScenarioConfig& config);

/// Resolved bandwidth and transmit power: explicit overrides win over the
/// standard table.
PowerAllocation resolve_power(const ScenarioConfig& config);

nlohmann::json to_json(const ScenarioConfig& config);

/// Missing keys take defaults; unknown keys and type mismatches raise
/// ConfigError with the dotted key path.
ScenarioConfig config_from_json(const nlohmann::json& j);

ScenarioConfig load_config(const std::filesystem::path& path);
void save_config(const ScenarioConfig& config, const std::filesystem::path& path);

}  // namespace mmw
