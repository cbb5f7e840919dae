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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmw/config.hpp"
#include "mmw/deployment.hpp"
#include "mmw/linkbudget.hpp"
#include "mmw/metrics.hpp"
#include "mmw/propagation.hpp"

namespace mmw {

/// Per-link multipath/array gain. Called with the link geometry and the
/// sector id; when unset the scenario's constant g_sm_db is used.
using GsmHook = std::function<double(const LinkGeometry&, int sector_id)>;

struct RunOptions {
    int workers = 1;  // 0 = hardware concurrency
    bool keep_links = false;
    GsmHook g_sm;
};

/// Everything a drop needs that does not change between drops.
struct RunContext {
    ScenarioConfig config;
    Deployment deployment;
    PowerAllocation power;
    PropagationParams propagation;  // config.propagation with the oxygen switch applied
    double noise_dbm = 0.0;
    double cl_snr0_threshold_db = 0.0;
    GsmHook g_sm;

    static RunContext make(const ScenarioConfig& config, GsmHook g_sm = {});
};

struct MsResult {
    int drop = 0;
    GeometryResult geometry;
    double serving_cl_db = 0.0;
};

struct RegimeFractions {
    double noise_limited = 0.0;
    double interference_limited = 0.0;
};

struct RunResult {
    ScenarioConfig config;
    PowerAllocation power;
    double noise_dbm = 0.0;
    double cl_snr0_threshold_db = 0.0;
    CdfSeries cl;  // serving-link coupling loss, one sample per MS
    CdfSeries gm;
    std::vector<std::uint64_t> drop_seeds;
    RegimeFractions regimes;
    std::vector<MsResult> per_ms;   // drop-major, MS order within a drop
    std::vector<LinkRecord> links;  // only with RunOptions::keep_links
    std::vector<std::string> warnings;
    double runtime_s = 0.0;
    int workers = 1;
};

/// Child seed of drop `drop_index` (0-based).
std::uint64_t drop_seed(std::uint64_t master_seed, int drop_index);

/// The kNumSectors links of one MS. LoS state and shadowing are drawn per
/// MS-site pair from a substream of `drop_seed`, shared by the site's sectors.
std::vector<LinkRecord> build_links(const RunContext& ctx, const MobileStation& ms, int ms_index, int ms_id,
                                    std::uint64_t drop_seed);

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

struct SweepEntry {
    double frequency_ghz = 0.0;
    PowerScheme scheme = PowerScheme::scaled;
    std::optional<RunResult> result;
    std::string error;  // set when the run failed
};

/// Cartesian product, frequency-major. Every run reuses the base seed so the
/// runs share drops, LoS states and shadowing and differ only in the swept
/// parameters. A failed run is recorded and the sweep continues.
std::vector<SweepEntry> run_sweep(const ScenarioConfig& base, std::span<const double> frequencies_ghz,
                                  std::span<const PowerScheme> schemes, const RunOptions& options = {});

/// Output subdirectory for one sweep entry, e.g. "60GHz_scaled".
std::string sweep_dir_name(double frequency_ghz, PowerScheme scheme);

nlohmann::json summary_json(const RunResult& result);

/// Writes cl_cdf.csv, gm_cdf.csv, summary.json and, if the result kept its
/// links, links.csv. Contents are a pure function of (config, seed).
void write_outputs(const RunResult& result, const std::filesystem::path& dir, bool write_links = false);

}  // namespace mmw
