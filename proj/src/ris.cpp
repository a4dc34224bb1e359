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

#include "rissim/ris.hpp"

#include <algorithm>
#include <cmath>

namespace rissim
{

RisPanel::RisPanel(std::string id, const Vec3 &position, const Vec3 &normal, double width, double height,
                   std::optional<std::string> carrier)
    : id_(std::move(id)), position_(position), normal_(normal), width_(width), height_(height),
      carrier_(std::move(carrier))
{
    if (std::abs(normal.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("RIS panel normal must be a unit vector.");
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("RIS panel dimensions must be positive.");
}

RisPanel RisPanel::with_pose(const PanelPose &pose) const
{
    return RisPanel(id_, pose.position, pose.normal, width_, height_, carrier_);
}

RisPanel RisPanel::flipped() const
{
    return RisPanel(id_, position_, -normal_, width_, height_, carrier_);
}

void MountSpec::validate() const
{
    if (!(downtilt >= 0.0 && downtilt <= std::numbers::pi / 2.0))
        throw std::invalid_argument("RIS downtilt must lie in [0, pi/2].");
}

double incidence_angle(const RisPanel &panel, const Vec3 &endpoint)
{
    const Vec3 d = endpoint - panel.position();
    const double n = d.norm();
    if (n == 0.0)
        throw DegeneratePositionError("Endpoint coincides with RIS panel " + panel.id() + ".");
    const double c = std::clamp(panel.normal().dot(d) / n, -1.0, 1.0);
    return std::acos(c);
}

PanelPose panel_pose_from_mount(const VehicleState &carrier, const MountSpec &mount, const Vec3 &align_to)
{
    mount.validate();
    const double cy = std::cos(carrier.heading), sy = std::sin(carrier.heading);
    const Vec3 &o = mount.offset;
    const Vec3 position = carrier.position + Vec3(cy * o.x() - sy * o.y(), sy * o.x() + cy * o.y(), o.z());

    const double dx = align_to.x() - position.x(), dy = align_to.y() - position.y();
    const double azimuth = std::hypot(dx, dy) > 1e-9 ? std::atan2(dy, dx) : carrier.heading;
    const double ce = std::cos(mount.downtilt);
    const Vec3 normal(ce * std::cos(azimuth), ce * std::sin(azimuth), -std::sin(mount.downtilt));
    return {position, normal};
}

bool is_available(const World &world, const RisPanel &panel, const Vec3 &tx, const Vec3 &rx)
{
    const Vec3 &p = panel.position();
    if (panel.normal().dot(tx - p) <= 0.0 || panel.normal().dot(rx - p) <= 0.0)
        return false;
    return has_los(world, tx, p) && has_los(world, p, rx);
}

} // namespace rissim
