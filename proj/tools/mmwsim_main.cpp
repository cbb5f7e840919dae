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

// mmwsim: run one scenario or a frequency/power-scheme sweep and write CDFs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmw/config.hpp"
#include "mmw/engine.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "mmwsim_out";
    std::optional<std::uint64_t> seed;
    int workers = 1;
    std::optional<std::string> environment;
    std::optional<int> drops;
    bool no_oxygen = false;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("-c,--config", a.config_path, "Scenario config (JSON); defaults apply when omitted")
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--out", a.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("-s,--seed", a.seed, "Override the master seed");
    cmd->add_option("-j,--workers", a.workers, "Worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--environment", a.environment, "outdoor | indoor")
        ->check(CLI::IsMember({"outdoor", "indoor"}));
    cmd->add_option("--drops", a.drops, "Number of drops")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-oxygen", a.no_oxygen, "Disable oxygen absorption");
}

mmw::ScenarioConfig base_config(const CommonArgs& a) {
    mmw::ScenarioConfig cfg = a.config_path.empty() ? mmw::ScenarioConfig{} : mmw::load_config(a.config_path);
    if (a.seed) cfg.seed = *a.seed;
    if (a.environment) cfg.environment = mmw::environment_from_string(*a.environment);
    if (a.drops) cfg.n_drops = *a.drops;
    if (a.no_oxygen) cfg.oxygen_absorption = false;
    return cfg;
}

void report(const mmw::RunResult& r, std::ostream& os) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "%6.1f GHz %-8s %-7s  n=%zu  CL median %8.2f dB  GM median %7.2f dB  GM<0dB %5.1f%%  "
                  "noise-limited %5.1f%%  (%.2f s)\n",
                  r.config.frequency_ghz, std::string(mmw::to_string(r.power.scheme)).c_str(),
                  std::string(mmw::to_string(r.config.environment)).c_str(), r.gm.size(), r.cl.median(),
                  r.gm.median(), 100.0 * r.gm.fraction_below(0.0), 100.0 * r.regimes.noise_limited, r.runtime_s);
    os << line;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmWave urban-micro system-level coupling-loss and geometry simulator"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::optional<double> run_freq;
    std::optional<std::string> run_scheme;
    bool write_links = false;
    bool print_config = false;
    auto* run = app.add_subcommand("run", "Run one scenario");
    add_common(run, run_args);
    run->add_option("-f,--frequency", run_freq, "Carrier frequency in GHz");
    run->add_option("--scheme", run_scheme, "scaled | constant")->check(CLI::IsMember({"scaled", "constant"}));
    run->add_flag("--links", write_links, "Also write links.csv (every BS-sector -> MS link)");
    run->add_flag("--print-config", print_config, "Print the resolved config as JSON and exit");

    CommonArgs sweep_args;
    std::vector<double> frequencies = {2, 10, 30, 60, 100};
    std::vector<std::string> schemes = {"scaled", "constant"};
    auto* sweep = app.add_subcommand("sweep", "Run every (frequency, power scheme) combination");
    add_common(sweep, sweep_args);
    sweep->add_option("-f,--frequencies", frequencies, "Carrier frequencies in GHz")->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--schemes", schemes, "Power schemes")->delimiter(',')
        ->check(CLI::IsMember({"scaled", "constant"}))->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            mmw::ScenarioConfig cfg = base_config(run_args);
            if (run_freq) cfg.frequency_ghz = *run_freq;
            if (run_scheme) cfg.power_scheme = mmw::power_scheme_from_string(*run_scheme);
            if (print_config) {
                std::cout << mmw::to_json(cfg).dump(2) << '\n';
                return 0;
            }
            mmw::RunOptions opts;
            opts.workers = run_args.workers;
            opts.keep_links = write_links;
            const mmw::RunResult r = mmw::run_scenario(cfg, opts);
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
            mmw::write_outputs(r, run_args.out_dir, write_links);
            report(r, std::cout);
            return 0;
        }

        const mmw::ScenarioConfig base = base_config(sweep_args);
        std::vector<mmw::PowerScheme> parsed;
        for (const auto& s : schemes) parsed.push_back(mmw::power_scheme_from_string(s));
        mmw::RunOptions opts;
        opts.workers = sweep_args.workers;
        const auto entries = mmw::run_sweep(base, frequencies, parsed, opts);

        nlohmann::json index = nlohmann::json::array();
        int failures = 0;
        for (const auto& e : entries) {
            const std::string name = mmw::sweep_dir_name(e.frequency_ghz, e.scheme);
            nlohmann::json item = {{"frequency_ghz", e.frequency_ghz},
                                   {"power_scheme", mmw::to_string(e.scheme)},
                                   {"dir", name}};
            if (e.result) {
                for (const auto& w : e.result->warnings) std::cerr << "warning: " << name << ": " << w << '\n';
                mmw::write_outputs(*e.result, std::filesystem::path(sweep_args.out_dir) / name);
                report(*e.result, std::cout);
                item["status"] = "ok";
            } else {
                ++failures;
                std::cerr << "error: " << name << ": " << e.error << '\n';
                item["status"] = "failed";
                item["error"] = e.error;
            }
            index.push_back(item);
        }
        std::filesystem::create_directories(sweep_args.out_dir);
        std::ofstream(std::filesystem::path(sweep_args.out_dir) / "sweep.json") << index.dump(2) << '\n';
        return failures == 0 ? 0 : 1;
    } catch (const mmw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const mmw::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
