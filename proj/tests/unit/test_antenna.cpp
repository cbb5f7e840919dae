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

#include "mmw/antenna.hpp"
#include "prop.hpp"

using namespace mmw;
using doctest::Approx;

TEST_CASE("sector gain at boresight and half-power points") {
    const AntennaPattern p;
    CHECK(sector_gain(p, 102.0, 0.0) == Approx(17.6));
    CHECK(sector_gain(p, 107.1, 0.0) == Approx(14.6));
    CHECK(sector_gain(p, 96.9, 0.0) == Approx(14.6));
    CHECK(sector_gain(p, 102.0, 35.0) == Approx(14.6));
    CHECK(sector_gain(p, 102.0, -35.0) == Approx(14.6));
}

TEST_CASE("sector gain floors") {
    const AntennaPattern p;
    CHECK(sector_gain(p, 0.0, 0.0) == Approx(17.6 - 20.0));
    CHECK(sector_gain(p, 102.0, 180.0) == Approx(17.6 - 25.0));
    CHECK(sector_gain(p, 180.0, 180.0) == Approx(17.6 - 45.0));
}

TEST_CASE("sector gain rejects out-of-range angles") {
    const AntennaPattern p;
    CHECK_THROWS_AS(sector_gain(p, -0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(sector_gain(p, 180.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(sector_gain(p, 90.0, -180.0), std::domain_error);
    CHECK_NOTHROW(sector_gain(p, 90.0, 180.0));
}

TEST_CASE("property: gain is maximal at (downtilt, 0), even in both offsets, and bounded") {
    const AntennaPattern p;
    prop::Gen g(12);
    for (int i = 0; i < prop::kCases; ++i) {
        const double dt = g.uniform(0.0, 78.0);
        const double phi = g.uniform(0.0, 179.9);
        const double gain = sector_gain(p, 102.0 + dt, phi);
        CHECK(gain <= 17.6);
        CHECK(gain >= 17.6 - 45.0);
        CHECK(gain == Approx(sector_gain(p, 102.0 - dt, phi)));
        CHECK(gain == Approx(sector_gain(p, 102.0 + dt, -phi)));
        if (dt > 0.0 || phi > 0.0) CHECK(gain < 17.6);
    }
}

TEST_CASE("direction_to") {
    // MS 8.5 m below the BS at 40 m: 12 degrees below the horizon, on the main beam.
    const double d = 8.5 / std::tan(12.0 * 3.141592653589793 / 180.0);
    const Direction dir = direction_to({d * 0.8660254037844387, d * 0.5}, 10.0, 1.5, 30.0);
    CHECK(dir.theta_deg == Approx(102.0));
    CHECK(dir.phi_deg == Approx(0.0).scale(1.0));

    const Direction behind = direction_to({-10.0, 0.0}, 10.0, 1.5, 0.0);
    CHECK(behind.phi_deg == Approx(180.0));
    const Direction above = direction_to({50.0, 0.0}, 10.0, 22.5, 0.0);
    CHECK(above.theta_deg < 90.0);
}

TEST_CASE("wrap_angle_deg folds into (-180, 180]") {
    CHECK(wrap_angle_deg(-180.0) == Approx(180.0));
    CHECK(wrap_angle_deg(540.0) == Approx(180.0));
    CHECK(wrap_angle_deg(-270.0) == Approx(90.0));
    CHECK(wrap_angle_deg(30.0 - 270.0) == Approx(120.0));
}

TEST_CASE("ms gain") {
    CHECK(ms_gain() == 0.0);
    CHECK(ms_gain(3.0) == 3.0);
}
