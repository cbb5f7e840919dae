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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mmw/antenna.hpp"
#include "mmw/config.hpp"
#include "mmw/deployment.hpp"
#include "mmw/engine.hpp"
#include "mmw/linkbudget.hpp"
#include "mmw/metrics.hpp"
#include "mmw/propagation.hpp"

namespace py = pybind11;
using namespace mmw;

namespace {

ScenarioConfig parse_config(const std::string& text) {
    return text.empty() ? ScenarioConfig{} : config_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_mmwsim, m) {
    m.doc() = "Native core of the mmwsim system-level simulator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("fspl", [](double f_ghz) { return fspl(Frequency::ghz(f_ghz)); }, py::arg("f_ghz"));
    m.def("pl_los_ci", [](double f_ghz, double d_m, double x_db) { return pl_los_ci(Frequency::ghz(f_ghz), d_m, x_db).db; },
          py::arg("f_ghz"), py::arg("d_m"), py::arg("x_db") = 0.0);
    m.def("pl_nlos_abg",
          [](double f_ghz, double d_m, double x_db) { return pl_nlos_abg(Frequency::ghz(f_ghz), d_m, x_db).db; },
          py::arg("f_ghz"), py::arg("d_m"), py::arg("x_db") = 0.0);
    m.def("los_probability", &los_probability, py::arg("d_2d_m"));
    m.def(
        "o2i_loss",
        [](double f_ghz, double d_in_m, double x_low_db, double x_high_db) {
            const O2iLoss l = o2i_loss(Frequency::ghz(f_ghz), d_in_m, x_low_db, x_high_db);
            return py::dict(py::arg("low_db") = l.low_db, py::arg("high_db") = l.high_db,
                            py::arg("wall_db") = l.wall_db, py::arg("in_building_db") = l.in_building_db,
                            py::arg("total_db") = l.total_db);
        },
        py::arg("f_ghz"), py::arg("d_in_m") = 0.0, py::arg("x_low_db") = 0.0, py::arg("x_high_db") = 0.0);
    m.def("oxygen_absorption", [](double f_ghz, double d_m) { return oxygen_absorption(Frequency::ghz(f_ghz), d_m); },
          py::arg("f_ghz"), py::arg("d_m"));
    m.def("sector_gain", [](double theta, double phi) { return sector_gain(AntennaPattern{}, theta, phi); },
          py::arg("theta_deg"), py::arg("phi_deg"));
    m.def("noise_power", [](double bw, double nf) { return noise_power(bw, nf); }, py::arg("bandwidth_hz"),
          py::arg("noise_figure_db") = 9.0);
    m.def(
        "power_allocation",
        [](const std::string& scheme, double f_ghz) {
            const PowerAllocation a = power_allocation(power_scheme_from_string(scheme), Frequency::ghz(f_ghz));
            return py::make_tuple(a.bandwidth_hz, a.p_tx_dbm);
        },
        py::arg("scheme"), py::arg("f_ghz"));
    m.def(
        "coupling_loss",
        [](double g_tx, double g_rx, double pl, double o2i, double oa, double g_sm) {
            return coupling_loss({g_tx, g_rx, pl, o2i, oa, g_sm});
        },
        py::arg("g_tx_dbi"), py::arg("g_rx_dbi"), py::arg("pl_db"), py::arg("l_o2i_db") = 0.0,
        py::arg("l_oa_db") = 0.0, py::arg("g_sm_db") = 0.0);
    m.def(
        "site_positions",
        [](double isd_m) {
            std::vector<std::pair<double, double>> out;
            for (const Site& s : generate_layout(isd_m).sites()) out.emplace_back(s.position.x, s.position.y);
            return out;
        },
        py::arg("isd_m") = 200.0);

    m.def("default_config_json", [] { return to_json(ScenarioConfig{}).dump(); });
    m.def("normalize_config_json", [](const std::string& text) { return to_json(parse_config(text)).dump(); },
          py::arg("config_json"));

    py::class_<CdfSeries>(m, "CdfSeries")
        .def(py::init([](std::vector<double> s) { return empirical_cdf(s); }), py::arg("samples"))
        .def("fraction_below", &CdfSeries::fraction_below, py::arg("x"))
        .def("percentile", &CdfSeries::percentile, py::arg("p"))
        .def("median", &CdfSeries::median)
        .def("__len__", &CdfSeries::size)
        .def_property_readonly("samples",
                               [](const CdfSeries& c) { return std::vector<double>(c.samples().begin(), c.samples().end()); });

    m.def(
        "run_scenario",
        [](const std::string& config_json, int workers) {
            const ScenarioConfig cfg = parse_config(config_json);
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run_scenario(cfg, {.workers = workers});
            }
            py::dict out;
            out["summary_json"] = summary_json(r).dump();
            out["coupling_loss"] = r.cl;
            out["geometry_metric"] = r.gm;
            return out;
        },
        py::arg("config_json") = "", py::arg("workers") = 1);
}
