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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "mmw/config.hpp"
#include "mmw/engine.hpp"

using namespace mmw;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

ScenarioConfig small(double f_ghz = 2.0) {
    ScenarioConfig c;
    c.frequency_ghz = f_ghz;
    c.n_drops = 2;
    c.ms_per_sector = 2;
    c.seed = 42;
    return c;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path temp_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("mmwsim_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string field_of(const ScenarioConfig& c) {
    try {
        validate(c);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST_CASE("config round-trips through JSON") {
    ScenarioConfig c;
    c.frequency_ghz = 60;
    c.power_scheme = PowerScheme::constant;
    c.environment = Environment::indoor;
    c.seed = 0xfedcba9876543210ULL;
    c.oxygen_absorption = false;
    c.propagation.sigma_nlos_db = 7.123456789;
    c.propagation.o2i_spread_reading = O2iSpreadReading::stddev;
    c.propagation.oxygen_db_per_km = {{60.0, 15.0}, {57.5, 11.25}};
    c.link_budget.bandwidth_hz = 123e6;
    c.antenna.hpbw_h_deg = 65.0;
    c.deployment.max_floors = 6;

    const auto j = to_json(c);
    const ScenarioConfig back = config_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.seed == c.seed);
    CHECK(back.propagation.oxygen_db_per_km.at(57.5) == 11.25);
    CHECK(*back.link_budget.bandwidth_hz == 123e6);
    CHECK_FALSE(back.link_budget.p_tx_dbm.has_value());
}

TEST_CASE("partial config takes defaults") {
    const ScenarioConfig c = config_from_json(nlohmann::json::parse(R"({"frequency_ghz": 30, "antenna": {"sla_v_db": 30}})"));
    CHECK(c.frequency_ghz == 30);
    CHECK(c.antenna.sla_v_db == 30);
    CHECK(c.antenna.g_max_dbi == 17.6);
    CHECK(c.n_drops == 20);
    CHECK(c.ms_per_sector == 10);
    CHECK(c.link_budget.noise_figure_db == 9.0);
}

TEST_CASE("config errors name the offending field") {
    auto field_from_json = [](const char* text) -> std::string {
        try {
            config_from_json(nlohmann::json::parse(text));
        } catch (const ConfigError& e) {
            return e.field();
        }
        return "";
    };
    CHECK(field_from_json(R"({"frequncy_ghz": 2})") == "frequncy_ghz");
    CHECK(field_from_json(R"({"propagation": {"alpha": 3}})") == "propagation.alpha");
    CHECK(field_from_json(R"({"n_drops": "many"})") == "n_drops");
    CHECK(field_from_json(R"({"power_scheme": "adaptive"})") == "power_scheme");
    CHECK(field_from_json(R"({"environment": "mixed"})") == "environment");
    CHECK(field_from_json(R"({"propagation": {"oxygen_db_per_km": {"sixty": 15}}})") ==
          "propagation.oxygen_db_per_km.sixty");

    ScenarioConfig c;
    c.n_drops = 0;
    CHECK(field_of(c) == "n_drops");
    c = {};
    c.frequency_ghz = 28;
    CHECK(field_of(c) == "link_budget.bandwidth_hz");
    c.link_budget.bandwidth_hz = 400e6;
    CHECK(field_of(c) == "link_budget.p_tx_dbm");
    c.link_budget.p_tx_dbm = 50.0;
    CHECK(field_of(c).empty());
    c = {};
    c.deployment.isd_m = -1;
    CHECK(field_of(c) == "deployment.isd_m");
    c = {};
    c.propagation.sigma_los_db = -1;
    CHECK(field_of(c) == "propagation.sigma_los_db");
}

TEST_CASE("out-of-range carrier produces a warning, not an error") {
    ScenarioConfig c = small();
    c.frequency_ghz = 120;
    c.link_budget.bandwidth_hz = 2e9;
    c.link_budget.p_tx_dbm = 44;
    const auto w = validate(c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("outside") != std::string::npos);
    CHECK(run_scenario(c).warnings.size() == 1);
}

TEST_CASE("resolve_power: overrides win over the table") {
    ScenarioConfig c;
    c.frequency_ghz = 60;
    CHECK(resolve_power(c).p_tx_dbm == 61.0);
    c.link_budget.p_tx_dbm = 30.0;
    CHECK(resolve_power(c).p_tx_dbm == 30.0);
    CHECK(resolve_power(c).bandwidth_hz == 1000e6);
}

TEST_CASE("drop seeds are a pure function of (seed, drop)") {
    CHECK(drop_seed(1, 0) == drop_seed(1, 0));
    CHECK(drop_seed(1, 0) != drop_seed(1, 1));
    CHECK(drop_seed(1, 0) != drop_seed(2, 0));
}

TEST_CASE("sample counts") {
    ScenarioConfig c = small();
    const RunResult r = run_scenario(c, {.workers = 1, .keep_links = true});
    CHECK(r.cl.size() == 2u * 57u * 2u);
    CHECK(r.gm.size() == 2u * 57u * 2u);
    CHECK(r.per_ms.size() == 228);
    CHECK(r.links.size() == 228u * 57u);
    CHECK(r.drop_seeds.size() == 2);
    CHECK(r.regimes.noise_limited + r.regimes.interference_limited == Approx(1.0));
}

TEST_CASE("link records satisfy the link-budget identities") {
    ScenarioConfig c = small(60);
    c.environment = Environment::indoor;
    const RunResult r = run_scenario(c, {.keep_links = true});
    for (const LinkRecord& l : r.links) {
        CHECK(l.coupling_loss_db == Approx(l.g_tx_dbi + l.g_rx_dbi - (l.pl_db + l.l_o2i_db + l.l_oa_db - l.g_sm_db)));
        CHECK(l.p_rx_dbm == Approx(r.power.p_tx_dbm + l.coupling_loss_db));
        CHECK(l.d_3d_m >= l.d_2d_m);
        CHECK(l.d_2d_m >= 10.0);
        CHECK(l.l_o2i_db > 0.0);
    }
    // Serving link dominates every interferer.
    for (const MsResult& m : r.per_ms) {
        for (int s = 0; s < 57; ++s) {
            const LinkRecord& l = r.links[static_cast<std::size_t>(m.geometry.ms_id * 57 + s)];
            CHECK(l.ms_id == m.geometry.ms_id);
            CHECK(m.serving_cl_db >= l.coupling_loss_db);
        }
    }
}

TEST_CASE("co-sited sectors share LoS state and distance") {
    const RunResult r = run_scenario(small(30), {.keep_links = true});
    for (std::size_t i = 0; i < r.links.size(); i += 3) {
        CHECK(r.links[i].is_los == r.links[i + 1].is_los);
        CHECK(r.links[i].is_los == r.links[i + 2].is_los);
        CHECK(r.links[i].pl_db == r.links[i + 2].pl_db);
    }
}

TEST_CASE("determinism across worker counts, byte for byte") {
    ScenarioConfig c = small(60);
    c.n_drops = 6;
    const fs::path a = temp_dir("det_a"), b = temp_dir("det_b"), d = temp_dir("det_c");
    write_outputs(run_scenario(c, {.workers = 1, .keep_links = true}), a, true);
    write_outputs(run_scenario(c, {.workers = 4, .keep_links = true}), b, true);
    write_outputs(run_scenario(c, {.workers = 1, .keep_links = true}), d, true);
    for (const char* f : {"cl_cdf.csv", "gm_cdf.csv", "summary.json", "links.csv"}) {
        CHECK(slurp(a / f) == slurp(b / f));
        CHECK(slurp(a / f) == slurp(d / f));
    }
    CHECK_FALSE(slurp(a / "summary.json").empty());
}

TEST_CASE("summary.json content") {
    const RunResult r = run_scenario(small(100));
    const auto j = summary_json(r);
    CHECK(j["seed"] == 42);
    CHECK(j["drop_seeds"].size() == 2);
    CHECK(j["power"]["p_tx_dbm"].get<double>() == 64.0);
    CHECK(j["geometry_metric"]["percentiles"].contains("48"));
    CHECK(j["fraction_below_0dB"].get<double>() == r.gm.fraction_below(0.0));
    CHECK(j["regime_fractions"].contains("noise_limited"));
    CHECK(config_from_json(j["config"]).frequency_ghz == 100);
}

TEST_CASE("links.csv requires kept links") {
    const RunResult r = run_scenario(small());
    CHECK_THROWS_AS(write_outputs(r, temp_dir("nolinks"), true), std::logic_error);
}

TEST_CASE("2 GHz: scaled and constant runs are identical") {
    ScenarioConfig c = small();
    c.power_scheme = PowerScheme::scaled;
    const RunResult s = run_scenario(c);
    c.power_scheme = PowerScheme::constant;
    const RunResult k = run_scenario(c);
    CHECK(s.gm == k.gm);
    CHECK(s.cl == k.cl);
}

TEST_CASE("scaled scheme: received power shifts by the power difference") {
    ScenarioConfig c = small(60);
    c.power_scheme = PowerScheme::constant;
    const RunResult k = run_scenario(c, {.keep_links = true});
    c.power_scheme = PowerScheme::scaled;
    const RunResult s = run_scenario(c, {.keep_links = true});
    REQUIRE(k.links.size() == s.links.size());
    for (std::size_t i = 0; i < k.links.size(); ++i) {
        CHECK(s.links[i].p_rx_dbm - k.links[i].p_rx_dbm == Approx(61.0 - 44.0));
        CHECK(s.links[i].coupling_loss_db == k.links[i].coupling_loss_db);
    }
}

TEST_CASE("interference-limited limit: GM does not depend on transmit power") {
    ScenarioConfig c = small(100);
    c.link_budget.noise_density_dbm_per_hz = -1000.0;
    c.power_scheme = PowerScheme::scaled;
    const RunResult s = run_scenario(c);
    c.power_scheme = PowerScheme::constant;
    const RunResult k = run_scenario(c);
    for (std::size_t i = 0; i < s.per_ms.size(); ++i) {
        CHECK(s.per_ms[i].geometry.gm_db == Approx(k.per_ms[i].geometry.gm_db).epsilon(1e-9));
    }
}

TEST_CASE("g_sm hook is applied per link") {
    ScenarioConfig c = small(30);
    const RunResult base = run_scenario(c, {.keep_links = true});
    RunOptions opts;
    opts.keep_links = true;
    opts.g_sm = [](const LinkGeometry& g, int) { return g.is_los ? 3.0 : 0.0; };
    const RunResult hooked = run_scenario(c, opts);
    for (std::size_t i = 0; i < base.links.size(); ++i) {
        const double expect = base.links[i].is_los ? 3.0 : 0.0;
        CHECK(hooked.links[i].g_sm_db == expect);
        CHECK(hooked.links[i].coupling_loss_db == Approx(base.links[i].coupling_loss_db + expect));
    }

    c.link_budget.g_sm_db = 2.0;
    const RunResult constant = run_scenario(c, {.keep_links = true});
    CHECK(constant.links[0].coupling_loss_db == Approx(base.links[0].coupling_loss_db + 2.0));
}

TEST_CASE("non-finite link aborts and names the link") {
    RunOptions opts;
    opts.g_sm = [](const LinkGeometry&, int sector) {
        return sector == 13 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    };
    try {
        run_scenario(small(), opts);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("sector 13") != std::string::npos);
    }
}

TEST_CASE("sweep") {
    ScenarioConfig c = small();
    const double one[] = {2.0};
    const PowerScheme scaled[] = {PowerScheme::scaled};
    const auto single = run_sweep(c, one, scaled);
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].result);
    CHECK(single[0].result->gm == run_scenario(c).gm);

    const double freqs[] = {2.0, 28.0, 60.0};
    const PowerScheme both[] = {PowerScheme::scaled, PowerScheme::constant};
    const auto entries = run_sweep(c, freqs, both);
    REQUIRE(entries.size() == 6);
    CHECK(entries[0].result->gm == entries[1].result->gm);
    CHECK_FALSE(entries[2].result.has_value());
    CHECK(entries[2].error.find("link_budget.bandwidth_hz") != std::string::npos);
    CHECK(entries[4].result.has_value());
    CHECK(entries[4].frequency_ghz == 60.0);
    CHECK(entries[5].scheme == PowerScheme::constant);
    CHECK(sweep_dir_name(60, PowerScheme::scaled) == "60GHz_scaled");

    CHECK_THROWS_AS(run_sweep(c, std::span<const double>{}, both), ConfigError);
}
