// SPDX-License-Identifier: Apache-2.0
//
// rissim: system-level simulation of RIS-assisted mmWave vehicular links
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
// ------------------------------------------------------------------------

#include "worlds.hpp"

namespace testkit
{

using rissim::Building;
using rissim::Point2;
using rissim::Polygon2D;
using rissim::Vec3;

Building box_building(std::int64_t id, double x0, double y0, double x1, double y1, double height)
{
    return Building(id, Polygon2D({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}), 0.0, height);
}

oracle::P3 to_p3(const Vec3 &v) { return {v.x(), v.y(), v.z()}; }

oracle::Box to_box(const Building &b)
{
    oracle::Box box{{}, b.base_z, b.top()};
    for (const Point2 &p : b.footprint.vertices())
        box.ring.emplace_back(p.x, p.y);
    return box;
}

std::vector<oracle::Box> to_boxes(const rissim::World &world)
{
    std::vector<oracle::Box> out;
    for (const auto &b : world.buildings())
        out.push_back(to_box(b));
    return out;
}

oracle::Panel to_panel(const rissim::RisPanel &p)
{
    return {p.id(), to_p3(p.position()), to_p3(p.normal()), p.width(), p.height()};
}

std::vector<oracle::Panel> to_panels(const std::vector<rissim::RisPanel> &panels)
{
    std::vector<oracle::Panel> out;
    for (const auto &p : panels)
        out.push_back(to_panel(p));
    return out;
}

oracle::Radio to_radio(const rissim::RadioParams &r) { return {r.fc_ghz, r.gain_tx, r.gain_rx, r.h_bs, r.h_ut}; }

rissim::World random_box_world(std::mt19937_64 &rng, int max_boxes)
{
    std::uniform_int_distribution<int> count(1, max_boxes);
    std::uniform_real_distribution<double> corner(0.0, 180.0), size(5.0, 60.0), height(5.0, 40.0);
    std::vector<Building> buildings;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
    {
        const double x0 = corner(rng);
        const double y0 = corner(rng);
        const double w = size(rng);
        const double d = size(rng);
        const double h = height(rng);
        buildings.push_back(box_building(i + 1, x0, y0, x0 + w, y0 + d, h));
    }
    return rissim::World(std::move(buildings), std::nullopt, rissim::RoadGraph{});
}

Vec3 random_point(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> xy(0.0, 200.0), z(0.0, 50.0);
    const double x = xy(rng);
    const double y = xy(rng);
    return Vec3(x, y, z(rng));
}

Vec3 random_unit(std::mt19937_64 &rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    while (true)
    {
        const double x = g(rng);
        const double y = g(rng);
        const double z = g(rng);
        const Vec3 v(x, y, z);
        if (v.norm() > 1e-6)
            return v.normalized();
    }
}

} // namespace testkit
