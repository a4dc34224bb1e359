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

#ifndef RISSIM_MOBILITY_HPP
#define RISSIM_MOBILITY_HPP

#include "rissim/geometry.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

enum class VehicleKind
{
    ground,
    uav,
    fixed
};

struct VehicleState
{
    std::string id;
    Vec3 position;
    double speed = 0.0;   // m/s
    double heading = 0.0; // yaw about z, radians, 0 = east
    VehicleKind kind = VehicleKind::fixed;
    double route_s = 0.0; // arc length along the route, ground vehicles only
};

class UnreachableError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Polyline through graph-adjacent road nodes, parameterized by arc length.
class RoutePlan
{
public:
    // Throws std::invalid_argument if a node is unknown or two consecutive nodes are not adjacent.
    RoutePlan(const RoadGraph &graph, std::vector<NodeId> nodes, bool loop = false);

    const std::vector<NodeId> &nodes() const { return nodes_; }
    const std::vector<Vec3> &points() const { return points_; }
    bool loop() const { return loop_; }
    double length() const { return cumulative_.back(); }

    // Arc length at each vertex; front() == 0.
    const std::vector<double> &vertex_s() const { return cumulative_; }

    // Position at arc length s, clamped to [0, length()].
    Vec3 position_at(double s) const;
    // Yaw of the segment containing s; at a vertex the outgoing segment wins.
    double heading_at(double s) const;

    // Arc lengths of vertices whose turn angle exceeds the threshold.
    std::vector<double> sharp_vertices(double min_turn_rad) const;

private:
    std::size_t segment_index(double s) const;

    std::vector<NodeId> nodes_;
    std::vector<Vec3> points_;
    std::vector<double> cumulative_;
    bool loop_ = false;
};

struct GroundMotionParams
{
    double v_max = 10.0;       // m/s
    double a_max = 2.0;        // m/s^2
    double b_max = 3.0;        // m/s^2, braking
    double corner_speed = 4.0; // m/s

    void validate() const;
};

struct UavFollowerParams
{
    double altitude = 60.0;        // meters above ground at the target
    Vec3 horizontal_offset{};      // in the target frame (x forward, y left); z ignored

    void validate() const;
};

inline constexpr double kCornerLookahead = 20.0;              // m
inline constexpr double kCornerTurnThreshold = 15.0 * std::numbers::pi / 180.0; // rad

// Minimum-length route; ties resolve to the lexicographically smallest node-id sequence.
// Throws std::invalid_argument for unknown nodes and UnreachableError if no path exists.
RoutePlan shortest_route(const RoadGraph &graph, NodeId from, NodeId to);

// Places a ground vehicle at arc length s of the plan (speed unchanged).
VehicleState place_on_route(VehicleState state, const RoutePlan &plan, double s);

// One explicit step: accelerate toward the target speed, then move at the new speed.
// Target speed is v_max, corner_speed when a sharp vertex lies within the lookahead, and on
// non-looping routes never more than the speed from which braking at b_max stops the vehicle
// exactly at the final vertex. A vehicle that would still overshoot is clamped there with speed 0.
VehicleState step_ground(const VehicleState &state, const RoutePlan &plan, const GroundMotionParams &params,
                         double dt);

// Idealized follower: hovers at the offset point above the target, yawed toward align_to.
VehicleState step_uav_follower(const VehicleState &uav, const VehicleState &target, const Vec3 &align_to,
                               const UavFollowerParams &params, double dt, const TerrainGrid *terrain = nullptr);

} // namespace rissim

#endif
