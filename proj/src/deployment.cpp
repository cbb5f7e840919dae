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

#include "mmw/deployment.hpp"

#include <cmath>
#include <random>
#include <string>

#include "mmw/rng.hpp"

namespace mmw {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Sector boresights, degrees counter-clockwise from +x.
constexpr std::array<double, kSectorsPerSite> kBoresights = {30.0, 150.0, 270.0};

}  // namespace

std::string_view to_string(Environment env) {
    return env == Environment::outdoor ? "outdoor" : "indoor";
}

Environment environment_from_string(std::string_view s) {
    if (s == "outdoor") return Environment::outdoor;
    if (s == "indoor") return Environment::indoor;
    throw ConfigError("environment", "expected 'outdoor' or 'indoor', got '" + std::string(s) + "'");
}

Deployment::Deployment(std::vector<Site> sites, double isd_m, std::array<Vec2, 6> wrap_vectors)
    : sites_(std::move(sites)), isd_(isd_m), wrap_(wrap_vectors) {}

const Sector& Deployment::sector(int sector_id) const {
    if (sector_id < 0 || sector_id >= num_sectors()) {
        throw std::out_of_range("sector id " + std::to_string(sector_id) + " out of range");
    }
    return sites_[static_cast<std::size_t>(sector_id / kSectorsPerSite)]
        .sectors[static_cast<std::size_t>(sector_id % kSectorsPerSite)];
}

double Deployment::cell_radius() const { return isd_ / kSqrt3; }

Deployment generate_layout(double isd_m, const DeploymentParams& params) {
    if (!(isd_m > 0.0) || !std::isfinite(isd_m)) {
        throw ConfigError("deployment.isd_m", "inter-site distance must be positive");
    }

    // Site lattice: nearest neighbours sit at 30 + 60k degrees, which puts the
    // three 30/150/270 degree sectors of adjacent sites face to face.
    std::vector<Vec2> positions;
    positions.reserve(kNumSites);
    positions.push_back({0.0, 0.0});
    for (int k = 0; k < 6; ++k) positions.push_back(Vec2::polar(isd_m, 30.0 + 60.0 * k));
    for (int k = 0; k < 6; ++k) {
        positions.push_back(Vec2::polar(2.0 * isd_m, 30.0 + 60.0 * k));
        positions.push_back(Vec2::polar(kSqrt3 * isd_m, 60.0 + 60.0 * k));
    }

    std::vector<Site> sites;
    sites.reserve(kNumSites);
    for (int s = 0; s < kNumSites; ++s) {
        Site site;
        site.position = positions[static_cast<std::size_t>(s)];
        site.height_m = params.bs_height_m;
        for (int k = 0; k < kSectorsPerSite; ++k) {
            site.sectors[static_cast<std::size_t>(k)] =
                Sector{s, kBoresights[static_cast<std::size_t>(k)], params.downtilt_deg};
        }
        sites.push_back(site);
    }

    // Cluster of 19 = 3^2 + 3*2 + 2^2 tiles the plane under translations by
    // 3a + 2b and its 60 degree rotations.
    const Vec2 a = Vec2::polar(isd_m, 30.0);
    const Vec2 b = Vec2::polar(isd_m, 90.0);
    const Vec2 w0 = a * 3.0 + b * 2.0;
    const double r = w0.norm();
    const double phase = rad_to_deg(std::atan2(w0.y, w0.x));
    std::array<Vec2, 6> wrap{};
    for (int k = 0; k < 6; ++k) wrap[static_cast<std::size_t>(k)] = Vec2::polar(r, phase + 60.0 * k);

    return Deployment(std::move(sites), isd_m, wrap);
}

Vec2 wrap_displacement(Vec2 site_pos, Vec2 ms_pos, const Deployment& deployment) {
    Vec2 best = ms_pos - site_pos;
    double best_sq = best.norm_sq();
    for (const Vec2& w : deployment.wrap_vectors()) {
        const Vec2 d = ms_pos - (site_pos + w);
        const double sq = d.norm_sq();
        if (sq < best_sq) {
            best = d;
            best_sq = sq;
        }
    }
    return best;
}

bool inside_site_hexagon(Vec2 p, Vec2 center, double radius) {
    const double dx = std::abs(p.x - center.x);
    const double dy = std::abs(p.y - center.y);
    return dy <= 0.5 * kSqrt3 * radius && kSqrt3 * dx + dy <= kSqrt3 * radius;
}

std::vector<MobileStation> drop_mobiles(const Deployment& deployment, Environment environment, int count,
                                        std::uint64_t drop_seed, const DeploymentParams& params) {
    if (count <= 0) throw ConfigError("ms_per_sector", "mobile station count must be positive");
    if (params.min_floors < 1 || params.max_floors < params.min_floors) {
        throw ConfigError("deployment.min_floors", "floor range must satisfy 1 <= min_floors <= max_floors");
    }

    const double radius = deployment.cell_radius();
    const double half_height = 0.5 * kSqrt3 * radius;
    const int n_sites = static_cast<int>(deployment.sites().size());

    std::vector<MobileStation> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Engine rng = make_stream(drop_seed, {kTagMsPosition, static_cast<std::uint64_t>(i)});
        std::uniform_int_distribution<int> pick_site(0, n_sites - 1);
        std::uniform_real_distribution<double> ux(-radius, radius);
        std::uniform_real_distribution<double> uy(-half_height, half_height);

        // Site cells have equal area and are each other's Voronoi regions, so
        // the nearest site is the owning one and the 10 m test is local.
        MobileStation ms;
        const Vec2 center = deployment.site(pick_site(rng)).position;
        for (;;) {
            const Vec2 offset{ux(rng), uy(rng)};
            if (!inside_site_hexagon(offset, {0.0, 0.0}, radius)) continue;
            if (offset.norm() < params.min_distance_m) continue;
            ms.position = center + offset;
            break;
        }

        if (environment == Environment::indoor) {
            std::uniform_int_distribution<int> floors(params.min_floors, params.max_floors);
            const int n_floors = floors(rng);
            std::uniform_int_distribution<int> floor(1, n_floors);
            ms.floor = floor(rng);
            ms.indoor = true;
            ms.indoor_depth_m = std::uniform_real_distribution<double>(0.0, params.max_indoor_depth_m)(rng);
            ms.height_m = params.floor_height_m * (ms.floor - 1) + params.ms_height_m;
        } else {
            ms.height_m = params.ms_height_m;
        }
        out.push_back(ms);
    }
    return out;
}

nlohmann::json to_json(const Deployment& deployment) {
    nlohmann::json sites = nlohmann::json::array();
    for (const Site& s : deployment.sites()) {
        nlohmann::json sectors = nlohmann::json::array();
        for (const Sector& sec : s.sectors) {
            sectors.push_back({{"boresight_deg", sec.boresight_deg}, {"downtilt_deg", sec.downtilt_deg}});
        }
        sites.push_back({{"x_m", s.position.x}, {"y_m", s.position.y}, {"height_m", s.height_m}, {"sectors", sectors}});
    }
    nlohmann::json wrap = nlohmann::json::array();
    for (const Vec2& w : deployment.wrap_vectors()) wrap.push_back({w.x, w.y});
    return {{"isd_m", deployment.isd()}, {"sites", sites}, {"wrap_vectors_m", wrap}};
}

}  // namespace mmw
