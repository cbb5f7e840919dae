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

#include "mmw/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "mmw/antenna.hpp"
#include "mmw/rng.hpp"

namespace mmw {

namespace {

struct DropOutput {
    std::vector<MsResult> per_ms;
    std::vector<LinkRecord> links;
};

DropOutput run_drop(const RunContext& ctx, int drop, std::uint64_t seed, bool keep_links) {
    const ScenarioConfig& cfg = ctx.config;
    const int count = cfg.ms_per_drop();
    const auto mobiles = drop_mobiles(ctx.deployment, cfg.environment, count, seed, cfg.deployment);

    DropOutput out;
    out.per_ms.reserve(static_cast<std::size_t>(count));
    if (keep_links) out.links.reserve(static_cast<std::size_t>(count) * kNumSectors);

    for (int i = 0; i < count; ++i) {
        const int ms_id = drop * count + i;
        auto links = build_links(ctx, mobiles[static_cast<std::size_t>(i)], i, ms_id, seed);
        const int serving = associate(links);
        const LinkRecord& s = links[static_cast<std::size_t>(serving)];

        MsResult r;
        r.drop = drop;
        r.serving_cl_db = s.coupling_loss_db;
        r.geometry.ms_id = ms_id;
        r.geometry.serving_sector = serving;
        r.geometry.gm_db = geometry_metric(links, serving, ctx.noise_dbm);
        r.geometry.regime = classify_regime(s.coupling_loss_db, ctx.cl_snr0_threshold_db);
        if (!std::isfinite(r.geometry.gm_db)) {
            throw NumericError("non-finite geometry metric at drop " + std::to_string(drop) + ", ms " +
                               std::to_string(i) + " (serving sector " + std::to_string(serving) + ")");
        }
        out.per_ms.push_back(r);
        if (keep_links) out.links.insert(out.links.end(), links.begin(), links.end());
    }
    return out;
}

int resolve_workers(int requested, int n_drops) {
    int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(w, 1, n_drops);
}

std::string format_ghz(double f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

}  // namespace

RunContext RunContext::make(const ScenarioConfig& config, GsmHook g_sm) {
    RunContext ctx{config,
                   generate_layout(config.deployment.isd_m, config.deployment),
                   resolve_power(config),
                   config.propagation,
                   0.0,
                   0.0,
                   std::move(g_sm)};
    ctx.propagation.oxygen_enabled = config.oxygen_absorption;
    ctx.noise_dbm = noise_power(ctx.power.bandwidth_hz, config.link_budget.noise_figure_db,
                                config.link_budget.noise_density_dbm_per_hz);
    ctx.cl_snr0_threshold_db = cl_snr0_threshold(ctx.power.p_tx_dbm, ctx.noise_dbm);
    return ctx;
}

std::uint64_t drop_seed(std::uint64_t master_seed, int drop_index) {
    return derive_seed(master_seed, {static_cast<std::uint64_t>(drop_index)});
}

std::vector<LinkRecord> build_links(const RunContext& ctx, const MobileStation& ms, int ms_index, int ms_id,
                                    std::uint64_t seed) {
    const ScenarioConfig& cfg = ctx.config;
    const Frequency fc = cfg.carrier();
    const double g_rx = ms_gain(cfg.link_budget.ms_gain_dbi);

    std::vector<LinkRecord> links;
    links.reserve(kNumSectors);
    for (const Site& site : ctx.deployment.sites()) {
        const int site_index = site.sectors[0].site_index;
        Engine rng = make_stream(seed, {kTagLink, static_cast<std::uint64_t>(ms_index),
                                        static_cast<std::uint64_t>(site_index)});
        const double u_los = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const ShadowDraws draws = scale_shadows(draw_unit_shadows(rng), ctx.propagation);

        const Vec2 disp = wrap_displacement(site.position, ms.position, ctx.deployment);
        LinkGeometry geom;
        geom.fc = fc;
        geom.d_2d_m = disp.norm();
        geom.d_3d_m = std::hypot(geom.d_2d_m, site.height_m - ms.height_m);
        geom.is_los = u_los < los_probability(geom.d_2d_m);
        geom.is_indoor = ms.indoor;
        geom.d_2d_in_m = std::min(ms.indoor_depth_m, geom.d_2d_m);

        for (const Sector& sector : site.sectors) {
            const int sector_id = site_index * kSectorsPerSite +
                                  static_cast<int>(&sector - site.sectors.data());
            const double g_sm = ctx.g_sm ? ctx.g_sm(geom, sector_id) : cfg.link_budget.g_sm_db;
            const LinkLoss loss = link_loss(geom, draws, g_sm, ctx.propagation);

            AntennaPattern pattern = cfg.antenna;
            pattern.downtilt_deg = sector.downtilt_deg;
            const Direction dir = direction_to(disp, site.height_m, ms.height_m, sector.boresight_deg);

            LinkRecord l;
            l.ms_id = ms_id;
            l.sector_id = sector_id;
            l.d_2d_m = geom.d_2d_m;
            l.d_3d_m = geom.d_3d_m;
            l.is_los = geom.is_los;
            l.pl_db = loss.pl_db;
            l.l_o2i_db = loss.o2i_db;
            l.l_oa_db = loss.oa_db;
            l.g_tx_dbi = sector_gain(pattern, dir.theta_deg, dir.phi_deg);
            l.g_rx_dbi = g_rx;
            l.g_sm_db = g_sm;
            l.coupling_loss_db = coupling_loss({l.g_tx_dbi, l.g_rx_dbi, l.pl_db, l.l_o2i_db, l.l_oa_db, l.g_sm_db});
            l.p_rx_dbm = ctx.power.p_tx_dbm + l.coupling_loss_db;
            if (!std::isfinite(l.coupling_loss_db) || !std::isfinite(l.p_rx_dbm)) {
                throw NumericError("non-finite coupling loss on link ms " + std::to_string(ms_id) + " -> sector " +
                                   std::to_string(sector_id) + " (pl=" + std::to_string(l.pl_db) +
                                   ", o2i=" + std::to_string(l.l_o2i_db) + ", oa=" + std::to_string(l.l_oa_db) +
                                   ", g_tx=" + std::to_string(l.g_tx_dbi) + ")");
            }
            links.push_back(l);
        }
    }
    return links;
}

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    RunResult result;
    result.warnings = validate(config);
    const RunContext ctx = RunContext::make(config, options.g_sm);

    const int n = config.n_drops;
    result.config = config;
    result.power = ctx.power;
    result.noise_dbm = ctx.noise_dbm;
    result.cl_snr0_threshold_db = ctx.cl_snr0_threshold_db;
    for (int d = 0; d < n; ++d) result.drop_seeds.push_back(drop_seed(config.seed, d));

    std::vector<DropOutput> drops(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int d = next++; d < n; d = next++) {
            const auto idx = static_cast<std::size_t>(d);
            try {
                drops[idx] = run_drop(ctx, d, result.drop_seeds[idx], options.keep_links);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    result.workers = resolve_workers(options.workers, n);
    if (result.workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < result.workers; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    // Ordered merge: output is independent of which worker ran which drop.
    std::vector<double> cl_samples;
    std::vector<double> gm_samples;
    std::size_t noise_limited = 0;
    for (auto& drop : drops) {
        for (const MsResult& r : drop.per_ms) {
            cl_samples.push_back(r.serving_cl_db);
            gm_samples.push_back(r.geometry.gm_db);
            if (r.geometry.regime == Regime::noise_limited) ++noise_limited;
        }
        result.per_ms.insert(result.per_ms.end(), drop.per_ms.begin(), drop.per_ms.end());
        if (options.keep_links) result.links.insert(result.links.end(), drop.links.begin(), drop.links.end());
    }
    result.cl = empirical_cdf(cl_samples);
    result.gm = empirical_cdf(gm_samples);
    const auto total = static_cast<double>(result.per_ms.size());
    result.regimes.noise_limited = static_cast<double>(noise_limited) / total;
    result.regimes.interference_limited = 1.0 - result.regimes.noise_limited;
    result.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<SweepEntry> run_sweep(const ScenarioConfig& base, std::span<const double> frequencies_ghz,
                                  std::span<const PowerScheme> schemes, const RunOptions& options) {
    if (frequencies_ghz.empty()) throw ConfigError("frequencies", "sweep needs at least one frequency");
    if (schemes.empty()) throw ConfigError("schemes", "sweep needs at least one power scheme");
    std::vector<SweepEntry> out;
    for (double f : frequencies_ghz) {
        for (PowerScheme scheme : schemes) {
            SweepEntry e;
            e.frequency_ghz = f;
            e.scheme = scheme;
            ScenarioConfig cfg = base;
            cfg.frequency_ghz = f;
            cfg.power_scheme = scheme;
            try {
                e.result = run_scenario(cfg, options);
            } catch (const std::exception& ex) {
                e.error = ex.what();
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

nlohmann::json summary_json(const RunResult& r) {
    return {
        {"config", to_json(r.config)},
        {"seed", r.config.seed},
        {"drop_seeds", r.drop_seeds},
        {"frequency_ghz", r.config.frequency_ghz},
        {"power",
         {{"scheme", to_string(r.power.scheme)},
          {"bandwidth_hz", r.power.bandwidth_hz},
          {"p_tx_dbm", r.power.p_tx_dbm}}},
        {"noise_dbm", r.noise_dbm},
        {"cl_snr0_threshold_db", r.cl_snr0_threshold_db},
        {"coupling_loss", cdf_summary(r.cl)},
        {"geometry_metric", cdf_summary(r.gm)},
        {"fraction_below_0dB", r.gm.fraction_below(0.0)},
        {"regime_fractions",
         {{"noise_limited", r.regimes.noise_limited}, {"interference_limited", r.regimes.interference_limited}}},
        {"warnings", r.warnings},
    };
}

void write_outputs(const RunResult& r, const std::filesystem::path& dir, bool write_links) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("cl_cdf.csv");
        write_cdf_csv(f, r.cl);
    }
    {
        auto f = open("gm_cdf.csv");
        write_cdf_csv(f, r.gm);
    }
    {
        auto f = open("summary.json");
        f << summary_json(r).dump(2) << '\n';
    }
    if (write_links) {
        if (r.links.empty()) throw std::logic_error("links.csv requested but the run did not keep its links");
        auto f = open("links.csv");
        f << kLinkCsvHeader << '\n';
        for (const LinkRecord& l : r.links) write_link_csv_row(f, l);
    }
}

std::string sweep_dir_name(double frequency_ghz, PowerScheme scheme) {
    return format_ghz(frequency_ghz) + "GHz_" + std::string(to_string(scheme));
}

}  // namespace mmw
