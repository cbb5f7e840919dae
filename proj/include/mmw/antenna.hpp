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

#include "mmw/units.hpp"

namespace mmw {

/// Synthesized sector beam of the 10-element vertical ULA: parabolic-in-dB
/// cuts in elevation and azimuth, each with its own attenuation floor.
struct AntennaPattern {
    double g_max_dbi = 17.6;
    double hpbw_v_deg = 10.2;
    double downtilt_deg = 102.0;  // from zenith
    double hpbw_h_deg = 70.0;
    double sla_v_db = 20.0;
    double front_back_db = 25.0;
};

/// Gain toward zenith angle `theta_deg` in [0, 180] and azimuth
/// `phi_deg` in (-180, 180] relative to boresight.
double sector_gain(const AntennaPattern& pattern, double theta_deg, double phi_deg);

/// Single isotropic element at the MS.
inline double ms_gain(double configured_dbi = 0.0) { return configured_dbi; }

struct Direction {
    double theta_deg = 90.0;  // zenith angle seen from the BS
    double phi_deg = 0.0;     // azimuth relative to sector boresight, (-180, 180]
};

/// Direction from a BS sector to an MS given the (wrapped) horizontal
/// displacement BS -> MS and both antenna heights.
Direction direction_to(Vec2 displacement, double h_bs_m, double h_ms_m, double boresight_deg);

/// Folds an angle into (-180, 180].
double wrap_angle_deg(double deg);

}  // namespace mmw
