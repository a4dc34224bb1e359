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

#ifndef RISSIM_RIS_HPP
#define RISSIM_RIS_HPP

#include "rissim/geometry.hpp"
#include "rissim/mobility.hpp"

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace rissim
{

class DegeneratePositionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct PanelPose
{
    Vec3 position;
    Vec3 normal; // unit length
};

// Rectangular reflecting surface of width a and height b. Static panels have no carrier.
class RisPanel
{
public:
    RisPanel(std::string id, const Vec3 &position, const Vec3 &normal, double width = 0.5, double height = 0.5,
             std::optional<std::string> carrier = std::nullopt);

    const std::string &id() const { return id_; }
    const Vec3 &position() const { return position_; }
    const Vec3 &normal() const { return normal_; }
    double width() const { return width_; }
    double height() const { return height_; }
    const std::optional<std::string> &carrier() const { return carrier_; }

    RisPanel with_pose(const PanelPose &pose) const;
    RisPanel flipped() const;

private:
    std::string id_;
    Vec3 position_;
    Vec3 normal_;
    double width_, height_;
    std::optional<std::string> carrier_;
};

struct MountSpec
{
    std::string carrier;
    double downtilt = 30.0 * std::numbers::pi / 180.0; // radians below horizontal
    Vec3 offset{};                                     // carrier frame: x forward, y left, z up

    void validate() const;
};

// Angle between the panel normal and the direction toward the endpoint, in [0, pi].
// Throws DegeneratePositionError if the endpoint coincides with the panel.
double incidence_angle(const RisPanel &panel, const Vec3 &endpoint);

// Panel position is the carrier position plus the yaw-rotated offset. The normal points in
// azimuth toward align_to, tilted down by the mount's downtilt. When align_to is straight
// above or below the panel the carrier heading supplies the azimuth.
PanelPose panel_pose_from_mount(const VehicleState &carrier, const MountSpec &mount, const Vec3 &align_to);

// Usable for a first-order reflection: line of sight on both legs and both endpoints strictly
// in front of the panel.
bool is_available(const World &world, const RisPanel &panel, const Vec3 &tx, const Vec3 &rx);

} // namespace rissim

#endif
