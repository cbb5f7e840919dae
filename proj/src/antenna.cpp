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

#include "mmw/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmw {

double wrap_angle_deg(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a <= -180.0) a += 360.0;
    if (a > 180.0) a -= 360.0;
    return a;
}

double sector_gain(const AntennaPattern& p, double theta_deg, double phi_deg) {
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0)) throw std::domain_error("zenith angle outside [0, 180]");
    if (!(phi_deg > -180.0 && phi_deg <= 180.0)) throw std::domain_error("azimuth outside (-180, 180]");

    const double v = (theta_deg - p.downtilt_deg) / p.hpbw_v_deg;
    const double h = phi_deg / p.hpbw_h_deg;
    const double att_v = std::min(12.0 * v * v, p.sla_v_db);
    const double att_h = std::min(12.0 * h * h, p.front_back_db);
    return std::max(p.g_max_dbi - att_v - att_h, p.g_max_dbi - (p.sla_v_db + p.front_back_db));
}

Direction direction_to(Vec2 displacement, double h_bs_m, double h_ms_m, double boresight_deg) {
    const double d_2d = displacement.norm();
    Direction dir;
    dir.theta_deg = 90.0 + rad_to_deg(std::atan2(h_bs_m - h_ms_m, d_2d));
    dir.phi_deg = wrap_angle_deg(rad_to_deg(std::atan2(displacement.y, displacement.x)) - boresight_deg);
    return dir;
}

}  // namespace mmw
