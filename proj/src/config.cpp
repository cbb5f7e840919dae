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

#include "mmw/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mmw {

using nlohmann::json;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

// Reads one JSON object, remembering which keys were consumed so unknown
// keys can be reported with their full dotted path.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    template <class T>
    void get(const std::string& key, T& out) {
        seen_.insert(key);
        const auto it = j_.find(key);
        if (it == j_.end()) return;
        try {
            out = it->template get<T>();
        } catch (const json::exception&) {
            throw ConfigError(join(path_, key), "wrong type: " + it->dump());
        }
    }

    template <class T>
    void get_optional(const std::string& key, std::optional<T>& out) {
        seen_.insert(key);
        const auto it = j_.find(key);
        if (it == j_.end() || it->is_null()) return;
        T v{};
        get(key, v);
        out = v;
    }

    std::optional<std::string> get_string(const std::string& key) {
        std::optional<std::string> s;
        get_optional(key, s);
        return s;
    }

    const json* child(const std::string& key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string path_of(const std::string& key) const { return join(path_, key); }

    void reject_unknown() const {
        for (const auto& [key, _] : j_.items()) {
            if (!seen_.contains(key)) throw ConfigError(join(path_, key), "unknown key");
        }
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_propagation(const json& j, PropagationParams& p) {
    ObjectReader r(j, "propagation");
    r.get("ci_ple_coeff", p.ci_ple_coeff);
    r.get("sigma_los_db", p.sigma_los_db);
    r.get("abg_alpha", p.abg_alpha);
    r.get("abg_beta_db", p.abg_beta_db);
    r.get("abg_gamma", p.abg_gamma);
    r.get("sigma_nlos_db", p.sigma_nlos_db);
    r.get("o2i_spread_low", p.o2i_spread_low);
    r.get("o2i_spread_high", p.o2i_spread_high);
    if (auto s = r.get_string("o2i_spread_reading")) {
        if (*s == "variance") {
            p.o2i_spread_reading = O2iSpreadReading::variance;
        } else if (*s == "stddev") {
            p.o2i_spread_reading = O2iSpreadReading::stddev;
        } else {
            throw ConfigError(r.path_of("o2i_spread_reading"), "expected 'variance' or 'stddev'");
        }
    }
    r.get("indoor_loss_db_per_m", p.indoor_loss_db_per_m);
    if (const json* m = r.child("materials")) {
        ObjectReader mr(*m, "propagation.materials");
        auto& c = p.materials;
        mr.get("glass_intercept_db", c.glass_intercept_db);
        mr.get("glass_slope_db_per_ghz", c.glass_slope_db_per_ghz);
        mr.get("irr_glass_intercept_db", c.irr_glass_intercept_db);
        mr.get("irr_glass_slope_db_per_ghz", c.irr_glass_slope_db_per_ghz);
        mr.get("concrete_intercept_db", c.concrete_intercept_db);
        mr.get("concrete_slope_db_per_ghz", c.concrete_slope_db_per_ghz);
        mr.reject_unknown();
    }
    if (const json* ox = r.child("oxygen_db_per_km")) {
        if (!ox->is_object()) throw ConfigError("propagation.oxygen_db_per_km", "expected an object");
        p.oxygen_db_per_km.clear();
        for (const auto& [key, value] : ox->items()) {
            const std::string path = "propagation.oxygen_db_per_km." + key;
            double f = 0.0;
            try {
                std::size_t used = 0;
                f = std::stod(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ConfigError(path, "key must be a frequency in GHz");
            }
            if (!value.is_number()) throw ConfigError(path, "rate must be a number");
            p.oxygen_db_per_km[f] = value.get<double>();
        }
    }
    r.reject_unknown();
}

void read_antenna(const json& j, AntennaPattern& a) {
    ObjectReader r(j, "antenna");
    r.get("g_max_dbi", a.g_max_dbi);
    r.get("hpbw_v_deg", a.hpbw_v_deg);
    r.get("downtilt_deg", a.downtilt_deg);
    r.get("hpbw_h_deg", a.hpbw_h_deg);
    r.get("sla_v_db", a.sla_v_db);
    r.get("front_back_db", a.front_back_db);
    r.reject_unknown();
}

void read_deployment(const json& j, DeploymentParams& d) {
    ObjectReader r(j, "deployment");
    r.get("isd_m", d.isd_m);
    r.get("bs_height_m", d.bs_height_m);
    r.get("ms_height_m", d.ms_height_m);
    r.get("min_distance_m", d.min_distance_m);
    r.get("min_floors", d.min_floors);
    r.get("max_floors", d.max_floors);
    r.get("floor_height_m", d.floor_height_m);
    r.get("max_indoor_depth_m", d.max_indoor_depth_m);
    r.reject_unknown();
}

void read_link_budget(const json& j, LinkBudgetParams& lb) {
    ObjectReader r(j, "link_budget");
    r.get("noise_density_dbm_per_hz", lb.noise_density_dbm_per_hz);
    r.get("noise_figure_db", lb.noise_figure_db);
    r.get("ms_gain_dbi", lb.ms_gain_dbi);
    r.get("g_sm_db", lb.g_sm_db);
    r.get_optional("bandwidth_hz", lb.bandwidth_hz);
    r.get_optional("p_tx_dbm", lb.p_tx_dbm);
    r.reject_unknown();
}

void require(bool ok, const char* field, const char* message) {
    if (!ok) throw ConfigError(field, message);
}

bool finite_all(std::initializer_list<double> xs) {
    for (double x : xs) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& c) {
    std::vector<std::string> warnings;
    require(std::isfinite(c.frequency_ghz) && c.frequency_ghz > 0.0, "frequency_ghz", "must be positive");
    require(c.n_drops >= 1, "n_drops", "must be at least 1");
    require(c.ms_per_sector >= 1, "ms_per_sector", "must be at least 1");

    const auto& p = c.propagation;
    require(finite_all({p.ci_ple_coeff, p.abg_beta_db, p.indoor_loss_db_per_m}), "propagation",
            "parameters must be finite");
    require(p.sigma_los_db >= 0.0, "propagation.sigma_los_db", "must be >= 0");
    require(p.sigma_nlos_db >= 0.0, "propagation.sigma_nlos_db", "must be >= 0");
    require(p.o2i_spread_low >= 0.0, "propagation.o2i_spread_low", "must be >= 0");
    require(p.o2i_spread_high >= 0.0, "propagation.o2i_spread_high", "must be >= 0");
    require(p.abg_alpha > 0.0, "propagation.abg_alpha", "must be positive");
    require(p.abg_gamma > 0.0, "propagation.abg_gamma", "must be positive");
    require(p.indoor_loss_db_per_m >= 0.0, "propagation.indoor_loss_db_per_m", "must be >= 0");

    const auto& a = c.antenna;
    require(std::isfinite(a.g_max_dbi), "antenna.g_max_dbi", "must be finite");
    require(a.hpbw_v_deg > 0.0, "antenna.hpbw_v_deg", "must be positive");
    require(a.hpbw_h_deg > 0.0, "antenna.hpbw_h_deg", "must be positive");
    require(a.sla_v_db >= 0.0, "antenna.sla_v_db", "must be >= 0");
    require(a.front_back_db >= 0.0, "antenna.front_back_db", "must be >= 0");
    require(a.downtilt_deg >= 0.0 && a.downtilt_deg <= 180.0, "antenna.downtilt_deg", "must be in [0, 180]");

    const auto& d = c.deployment;
    require(std::isfinite(d.isd_m) && d.isd_m > 0.0, "deployment.isd_m", "must be positive");
    require(d.bs_height_m > 0.0, "deployment.bs_height_m", "must be positive");
    require(d.ms_height_m > 0.0, "deployment.ms_height_m", "must be positive");
    require(d.min_distance_m >= 1.0, "deployment.min_distance_m", "must be at least the 1 m reference distance");
    require(d.min_distance_m < 0.5 * d.isd_m, "deployment.min_distance_m", "must be below half the ISD");
    require(d.min_floors >= 1, "deployment.min_floors", "must be at least 1");
    require(d.max_floors >= d.min_floors, "deployment.max_floors", "must be >= min_floors");
    require(d.floor_height_m >= 0.0, "deployment.floor_height_m", "must be >= 0");
    require(d.max_indoor_depth_m >= 0.0, "deployment.max_indoor_depth_m", "must be >= 0");

    const auto& lb = c.link_budget;
    require(finite_all({lb.noise_density_dbm_per_hz, lb.noise_figure_db, lb.ms_gain_dbi, lb.g_sm_db}),
            "link_budget", "parameters must be finite");
    if (lb.bandwidth_hz) require(*lb.bandwidth_hz > 0.0, "link_budget.bandwidth_hz", "must be positive");
    if (lb.p_tx_dbm) require(std::isfinite(*lb.p_tx_dbm), "link_budget.p_tx_dbm", "must be finite");
    (void)resolve_power(c);

    if (!in_validity_range(c.carrier())) {
        warnings.push_back("frequency " + std::to_string(c.frequency_ghz) +
                           " GHz lies outside the 0.5-100 GHz range the path-loss models were fitted over");
    }
    return warnings;
}

PowerAllocation resolve_power(const ScenarioConfig& c) {
    const auto& lb = c.link_budget;
    if (lb.bandwidth_hz && lb.p_tx_dbm) return {c.power_scheme, c.carrier(), *lb.bandwidth_hz, *lb.p_tx_dbm};
    PowerAllocation alloc;
    try {
        alloc = power_allocation(c.power_scheme, c.carrier());
    } catch (const ConfigError&) {
        throw ConfigError(lb.bandwidth_hz ? "link_budget.p_tx_dbm" : "link_budget.bandwidth_hz",
                          "required for non-standard carrier " + std::to_string(c.frequency_ghz) + " GHz");
    }
    if (lb.bandwidth_hz) alloc.bandwidth_hz = *lb.bandwidth_hz;
    if (lb.p_tx_dbm) alloc.p_tx_dbm = *lb.p_tx_dbm;
    return alloc;
}

json to_json(const ScenarioConfig& c) {
    const auto& p = c.propagation;
    json oxygen = json::object();
    for (const auto& [f, rate] : p.oxygen_db_per_km) oxygen[json(f).dump()] = rate;
    const auto& m = p.materials;
    const auto& a = c.antenna;
    const auto& d = c.deployment;
    const auto& lb = c.link_budget;
    return {
        {"frequency_ghz", c.frequency_ghz},
        {"power_scheme", to_string(c.power_scheme)},
        {"environment", to_string(c.environment)},
        {"n_drops", c.n_drops},
        {"ms_per_sector", c.ms_per_sector},
        {"seed", c.seed},
        {"oxygen_absorption", c.oxygen_absorption},
        {"link_budget",
         {{"noise_density_dbm_per_hz", lb.noise_density_dbm_per_hz},
          {"noise_figure_db", lb.noise_figure_db},
          {"ms_gain_dbi", lb.ms_gain_dbi},
          {"g_sm_db", lb.g_sm_db},
          {"bandwidth_hz", lb.bandwidth_hz ? json(*lb.bandwidth_hz) : json(nullptr)},
          {"p_tx_dbm", lb.p_tx_dbm ? json(*lb.p_tx_dbm) : json(nullptr)}}},
        {"propagation",
         {{"ci_ple_coeff", p.ci_ple_coeff},
          {"sigma_los_db", p.sigma_los_db},
          {"abg_alpha", p.abg_alpha},
          {"abg_beta_db", p.abg_beta_db},
          {"abg_gamma", p.abg_gamma},
          {"sigma_nlos_db", p.sigma_nlos_db},
          {"o2i_spread_low", p.o2i_spread_low},
          {"o2i_spread_high", p.o2i_spread_high},
          {"o2i_spread_reading", p.o2i_spread_reading == O2iSpreadReading::variance ? "variance" : "stddev"},
          {"indoor_loss_db_per_m", p.indoor_loss_db_per_m},
          {"materials",
           {{"glass_intercept_db", m.glass_intercept_db},
            {"glass_slope_db_per_ghz", m.glass_slope_db_per_ghz},
            {"irr_glass_intercept_db", m.irr_glass_intercept_db},
            {"irr_glass_slope_db_per_ghz", m.irr_glass_slope_db_per_ghz},
            {"concrete_intercept_db", m.concrete_intercept_db},
            {"concrete_slope_db_per_ghz", m.concrete_slope_db_per_ghz}}},
          {"oxygen_db_per_km", oxygen}}},
        {"antenna",
         {{"g_max_dbi", a.g_max_dbi},
          {"hpbw_v_deg", a.hpbw_v_deg},
          {"downtilt_deg", a.downtilt_deg},
          {"hpbw_h_deg", a.hpbw_h_deg},
          {"sla_v_db", a.sla_v_db},
          {"front_back_db", a.front_back_db}}},
        {"deployment",
         {{"isd_m", d.isd_m},
          {"bs_height_m", d.bs_height_m},
          {"ms_height_m", d.ms_height_m},
          {"min_distance_m", d.min_distance_m},
          {"min_floors", d.min_floors},
          {"max_floors", d.max_floors},
          {"floor_height_m", d.floor_height_m},
          {"max_indoor_depth_m", d.max_indoor_depth_m}}},
    };
}

ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig c;
    ObjectReader r(j, "");
    r.get("frequency_ghz", c.frequency_ghz);
    if (auto s = r.get_string("power_scheme")) c.power_scheme = power_scheme_from_string(*s);
    if (auto s = r.get_string("environment")) c.environment = environment_from_string(*s);
    r.get("n_drops", c.n_drops);
    r.get("ms_per_sector", c.ms_per_sector);
    r.get("seed", c.seed);
    r.get("oxygen_absorption", c.oxygen_absorption);
    if (const json* sub = r.child("link_budget")) read_link_budget(*sub, c.link_budget);
    if (const json* sub = r.child("propagation")) read_propagation(*sub, c.propagation);
    if (const json* sub = r.child("antenna")) read_antenna(*sub, c.antenna);
    if (const json* sub = r.child("deployment")) read_deployment(*sub, c.deployment);
    r.reject_unknown();
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open " + path.string());
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

void save_config(const ScenarioConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json(config).dump(2) << '\n';
}

}  // namespace mmw
