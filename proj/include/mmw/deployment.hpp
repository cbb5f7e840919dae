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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mmw/units.hpp"

namespace mmw {

inline constexpr int kNumSites = 19;
inline constexpr int kSectorsPerSite = 3;
inline constexpr int kNumSectors = kNumSites * kSectorsPerSite;

enum class Environment { outdoor, indoor };

std::string_view to_string(Environment env);
Environment environment_from_string(std::string_view s);

/// Layout and mobile-station drop parameters. Defaults are the 3D-UMi values.
struct DeploymentParams {
    double isd_m = 200.0;
    double bs_height_m = 10.0;
    double downtilt_deg = 102.0;
    double ms_height_m = 1.5;           // outdoor MS and ground floor indoor MS
    double min_distance_m = 10.0;       // 2D, to every site
    int min_floors = 4;                 // building floor count, drawn uniformly
    int max_floors = 8;
    double floor_height_m = 3.0;
    double max_indoor_depth_m = 25.0;
};

struct Sector {
    int site_index = 0;
    double boresight_deg = 0.0;
    double downtilt_deg = 102.0;
};

struct Site {
    Vec2 position;
    double height_m = 10.0;
    std::array<Sector, kSectorsPerSite> sectors{};
};

/// 19-site / 57-sector hexagonal cluster with wrap-around. Immutable once built.
class Deployment {
public:
    Deployment(std::vector<Site> sites, double isd_m, std::array<Vec2, 6> wrap_vectors);

    std::span<const Site> sites() const { return sites_; }
    const Site& site(int index) const { return sites_.at(static_cast<std::size_t>(index)); }
    double isd() const { return isd_; }
    const std::array<Vec2, 6>& wrap_vectors() const { return wrap_; }

    /// Sector ids run 0..56, site-major: id = 3 * site + k.
    const Sector& sector(int sector_id) const;
    int num_sectors() const { return static_cast<int>(sites_.size()) * kSectorsPerSite; }

    /// Circumradius of the hexagonal site cell (ISD / sqrt 3).
    double cell_radius() const;

private:
    std::vector<Site> sites_;
    double isd_;
    std::array<Vec2, 6> wrap_;
};

struct MobileStation {
    Vec2 position;
    double height_m = 1.5;
    bool indoor = false;
    double indoor_depth_m = 0.0;
    int floor = 1;
};

Deployment generate_layout(double isd_m, const DeploymentParams& params = {});

/// Displacement from the closest of the 7 site images (original plus the six
/// wrap translations) to the MS.
Vec2 wrap_displacement(Vec2 site_pos, Vec2 ms_pos, const Deployment& deployment);

/// Drops `count` MSs uniformly over the cluster footprint. MS `i` draws from
/// its own substream of `drop_seed`, so the result does not depend on the
/// order in which drops are generated.
std::vector<MobileStation> drop_mobiles(const Deployment& deployment, Environment environment, int count,
                                        std::uint64_t drop_seed, const DeploymentParams& params = {});

/// True if `p` lies in the hexagonal cell of the site at `center` (circumradius `radius`,
/// flat-topped: vertices at 0, 60, ... degrees).
bool inside_site_hexagon(Vec2 p, Vec2 center, double radius);

nlohmann::json to_json(const Deployment& deployment);

}  // namespace mmw
