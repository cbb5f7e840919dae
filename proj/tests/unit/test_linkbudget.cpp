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

#include <sstream>
#include <vector>

#include "../oracles.hpp"
#include "mmw/linkbudget.hpp"
#include "prop.hpp"

using namespace mmw;
using doctest::Approx;

namespace {

std::vector<LinkRecord> links_with_cl(const std::vector<double>& cls) {
    std::vector<LinkRecord> out;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        LinkRecord l;
        l.sector_id = static_cast<int>(i);
        l.coupling_loss_db = cls[i];
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("power allocation table") {
    const PowerAllocation s60 = power_allocation(PowerScheme::scaled, Frequency::ghz(60));
    CHECK(s60.bandwidth_hz == 1000e6);
    CHECK(s60.p_tx_dbm == 61.0);
    const PowerAllocation c100 = power_allocation(PowerScheme::constant, Frequency::ghz(100));
    CHECK(c100.bandwidth_hz == 2000e6);
    CHECK(c100.p_tx_dbm == 44.0);
    const PowerAllocation s2 = power_allocation(PowerScheme::scaled, Frequency::ghz(2));
    const PowerAllocation c2 = power_allocation(PowerScheme::constant, Frequency::ghz(2));
    CHECK(s2.p_tx_dbm == c2.p_tx_dbm);
    CHECK(s2.bandwidth_hz == c2.bandwidth_hz);

    const double bw[] = {20e6, 300e6, 500e6, 1000e6, 2000e6};
    const double scaled[] = {44.0, 55.8, 58.0, 61.0, 64.0};
    const double fcs[] = {2, 10, 30, 60, 100};
    for (int i = 0; i < 5; ++i) {
        const auto a = power_allocation(PowerScheme::scaled, Frequency::ghz(fcs[i]));
        CHECK(a.bandwidth_hz == bw[i]);
        CHECK(a.p_tx_dbm == scaled[i]);
        CHECK(power_allocation(PowerScheme::constant, Frequency::ghz(fcs[i])).p_tx_dbm == 44.0);
    }
    CHECK_THROWS_AS(power_allocation(PowerScheme::scaled, Frequency::ghz(28)), ConfigError);
}

TEST_CASE("noise power") {
    CHECK(std::abs(noise_power(20e6, 9.0) - (-91.99)) < 0.01);
    CHECK(noise_power(1.0, 0.0) == Approx(-174.0));
    CHECK(std::abs(noise_power(2e9, 9.0) - (-71.99)) < 0.01);
    CHECK(noise_power(20e6, 9.0) == Approx(oracle::noise_dbm(20e6, 9.0)));
    CHECK_THROWS_AS(noise_power(0.0, 9.0), std::domain_error);
}

TEST_CASE("coupling loss") {
    CHECK(coupling_loss({.g_tx_dbi = 17.6, .pl_db = 100.0}) == Approx(-82.4));
    CHECK(coupling_loss({}) == 0.0);
    CHECK(std::abs(coupling_loss({.g_tx_dbi = 17.6, .pl_db = 124.46, .l_o2i_db = 34.98, .l_oa_db = 3.0}) -
                   (-144.84)) < 1e-9);
    CHECK(coupling_loss({.pl_db = 100.0, .g_sm_db = 3.0}) == Approx(-97.0));
}

TEST_CASE("property: coupling loss plus link loss equals total antenna gain") {
    prop::Gen g(31);
    for (int i = 0; i < prop::kCases; ++i) {
        const CouplingTerms t{g.uniform(-30, 20), g.uniform(0, 5), g.uniform(30, 200), g.uniform(0, 80),
                              g.uniform(0, 10), 0.0};
        const double cl = coupling_loss(t);
        const double link = t.pl_db + t.l_o2i_db + t.l_oa_db - t.g_sm_db;
        CHECK(cl + link == Approx(t.g_tx_dbi + t.g_rx_dbi));
        CHECK(cl <= t.g_tx_dbi + t.g_rx_dbi);
    }
}

TEST_CASE("SNR=0 threshold") {
    CHECK(std::abs(cl_snr0_threshold(44.0, -91.99) - (-135.99)) < 1e-9);
    CHECK(std::abs(cl_snr0_threshold(44.0, -71.99) - (-115.99)) < 1e-9);
    CHECK(cl_snr0_threshold(61.0, -81.0) == Approx(-142.0));
}

TEST_CASE("association") {
    std::vector<double> cls(57, -120.0);
    cls[17] = -110.0;
    CHECK(associate(links_with_cl(cls)) == 17);

    cls[5] = -110.0;
    CHECK(associate(links_with_cl(cls)) == 5);

    // Tie-break holds regardless of storage order.
    auto rev = links_with_cl(cls);
    std::reverse(rev.begin(), rev.end());
    CHECK(associate(rev) == 5);

    CHECK_THROWS_AS(associate(std::vector<LinkRecord>{}), std::logic_error);
}

TEST_CASE("property: association matches brute-force argmax and is shift invariant") {
    prop::Gen g(41);
    for (int i = 0; i < prop::kCases; ++i) {
        std::vector<double> cls(57);
        for (double& c : cls) c = g.uniform(-180, -60);
        if (g.coin()) cls[static_cast<std::size_t>(g.integer(0, 56))] = cls[static_cast<std::size_t>(g.integer(0, 56))];
        const auto links = links_with_cl(cls);
        const int best = associate(links);
        CHECK(best == static_cast<int>(oracle::argmax(cls)));

        const double shift = g.uniform(-50, 50);
        std::vector<double> shifted = cls;
        for (double& c : shifted) c += shift;
        CHECK(associate(links_with_cl(shifted)) == best);
        for (const auto& l : links) CHECK(links[static_cast<std::size_t>(best)].coupling_loss_db >= l.coupling_loss_db);
    }
}

TEST_CASE("link csv row has the fixed column order") {
    LinkRecord l{3, 7, 12.5, 14.0, true, 80.0, 0.0, 0.5, 17.0, 0.0, 1.0, -62.5, -18.5};
    std::ostringstream os;
    write_link_csv_row(os, l);
    CHECK(os.str() == "3,7,12.500000,14.000000,1,80.000000,0.000000,0.500000,17.000000,1.000000,-62.500000,-18.500000\n");
    CHECK(kLinkCsvHeader == "ms_id,sector_id,d_2D,d_3D,is_los,pl,l_o2i,l_oa,g_tx,g_sm,coupling_loss,p_rx");
}

TEST_CASE("scheme names") {
    CHECK(power_scheme_from_string("scaled") == PowerScheme::scaled);
    CHECK(to_string(PowerScheme::constant) == "constant");
    CHECK_THROWS_AS(power_scheme_from_string("adaptive"), ConfigError);
}
