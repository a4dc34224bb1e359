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

#include "rissim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace rissim
{

// ---------- RoutePlan ----------

RoutePlan::RoutePlan(const RoadGraph &graph, std::vector<NodeId> nodes, bool loop)
    : nodes_(std::move(nodes)), loop_(loop)
{
    if (nodes_.empty())
        throw std::invalid_argument("Route needs at least one node.");
    for (std::size_t i = 0; i < nodes_.size(); ++i)
    {
        if (!graph.has_node(nodes_[i]))
            throw std::invalid_argument("Route references unknown road node " + std::to_string(nodes_[i]) + ".");
        if (i > 0 && !graph.adjacent(nodes_[i - 1], nodes_[i]))
            throw std::invalid_argument("Route nodes " + std::to_string(nodes_[i - 1]) + " and " +
                                        std::to_string(nodes_[i]) + " are not adjacent.");
        points_.push_back(graph.position(nodes_[i]));
    }
    cumulative_.push_back(0.0);
    for (std::size_t i = 1; i < points_.size(); ++i)
        cumulative_.push_back(cumulative_.back() + distance3d(points_[i - 1], points_[i]));
}

std::size_t RoutePlan::segment_index(double s) const
{
    if (points_.size() < 2)
        return 0;
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - cumulative_.begin()) - 1));
    return std::min(idx, points_.size() - 2);
}

Vec3 RoutePlan::position_at(double s) const
{
    if (points_.size() < 2)
        return points_.front();
    s = std::clamp(s, 0.0, length());
    const std::size_t i = segment_index(s);
    const double seg = cumulative_[i + 1] - cumulative_[i];
    if (seg <= 0.0)
        return points_[i];
    return lerp(points_[i], points_[i + 1], std::min(1.0, (s - cumulative_[i]) / seg));
}

double RoutePlan::heading_at(double s) const
{
    if (points_.size() < 2)
        return 0.0;
    const std::size_t i = segment_index(std::clamp(s, 0.0, length()));
    const Vec3 d = points_[i + 1] - points_[i];
    return std::atan2(d.y(), d.x());
}

std::vector<double> RoutePlan::sharp_vertices(double min_turn_rad) const
{
    std::vector<double> out;
    const std::size_t n = points_.size();
    auto turn = [](const Vec3 &a, const Vec3 &b, const Vec3 &c)
    {
        const double h1 = std::atan2(b.y() - a.y(), b.x() - a.x());
        const double h2 = std::atan2(c.y() - b.y(), c.x() - b.x());
        return std::abs(std::remainder(h2 - h1, 2.0 * std::numbers::pi));
    };
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (turn(points_[i - 1], points_[i], points_[i + 1]) > min_turn_rad)
            out.push_back(cumulative_[i]);
    // Closed loops also turn at the start/end vertex.
    if (loop_ && n >= 3 && nodes_.front() == nodes_.back() &&
        turn(points_[n - 2], points_[0], points_[1]) > min_turn_rad)
    {
        out.insert(out.begin(), 0.0);
        out.push_back(length());
    }
    return out;
}

// ---------- Params ----------

void GroundMotionParams::validate() const
{
    if (!(v_max > 0.0) || !(a_max > 0.0) || !(b_max > 0.0) || !(corner_speed > 0.0))
        throw std::invalid_argument("Ground motion parameters must be strictly positive.");
}

void UavFollowerParams::validate() const
{
    if (!(altitude > 0.0))
        throw std::invalid_argument("UAV follower altitude must be positive.");
}

// ---------- Routing ----------

RoutePlan shortest_route(const RoadGraph &graph, NodeId from, NodeId to)
{
    if (!graph.has_node(from) || !graph.has_node(to))
        throw std::invalid_argument("Route endpoints must exist in the road graph.");

    // Distances to the destination; the forward walk then picks the smallest tight neighbor.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::map<NodeId, double> dist;
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[to] = 0.0;
    queue.push({0.0, to});
    while (!queue.empty())
    {
        const auto [d, n] = queue.top();
        queue.pop();
        if (d > dist[n])
            continue;
        for (const auto &[m, w] : graph.neighbors(n))
        {
            const double nd = d + w;
            const auto it = dist.find(m);
            if (it == dist.end() || nd < it->second)
            {
                dist[m] = nd;
                queue.push({nd, m});
            }
        }
    }

    auto dist_of = [&](NodeId n) { return dist.contains(n) ? dist.at(n) : inf; };
    if (dist_of(from) == inf)
        throw UnreachableError("No road path from node " + std::to_string(from) + " to " + std::to_string(to) + ".");

    std::vector<NodeId> path{from};
    std::set<NodeId> visited{from};
    NodeId cur = from;
    while (cur != to)
    {
        const double dc = dist_of(cur);
        std::optional<NodeId> next;
        for (const auto &[m, w] : graph.neighbors(cur)) // ascending id
        {
            if (visited.contains(m))
                continue;
            if (std::abs(w + dist_of(m) - dc) <= 1e-9 * std::max(1.0, dc))
            {
                next = m;
                break;
            }
        }
        if (!next)
            throw UnreachableError("Route reconstruction failed.");
        cur = *next;
        visited.insert(cur);
        path.push_back(cur);
    }
    return RoutePlan(graph, std::move(path));
}

// ---------- Kinematics ----------

namespace
{

// Largest speed from which repeated braking by b*dt per step (moving at the new speed each step)
// covers exactly `remaining` meters. Piecewise-linear in between integer step counts.
double stopping_speed(double remaining, double b, double dt)
{
    if (remaining <= 0.0)
        return 0.0;
    const double unit = b * dt * dt;
    const double r = remaining / unit;
    double n = std::floor((-1.0 + std::sqrt(1.0 + 8.0 * r)) / 2.0);
    // Guard against rounding in the closed form.
    while (n * (n + 1.0) / 2.0 > r)
        n -= 1.0;
    while ((n + 1.0) * (n + 2.0) / 2.0 <= r)
        n += 1.0;
    const double k = n + (r - n * (n + 1.0) / 2.0) / (n + 1.0);
    return k * b * dt;
}

} // namespace

VehicleState place_on_route(VehicleState state, const RoutePlan &plan, double s)
{
    if (plan.loop() && plan.length() > 0.0)
        s = std::fmod(std::fmod(s, plan.length()) + plan.length(), plan.length());
    s = std::clamp(s, 0.0, plan.length());
    state.route_s = s;
    state.position = plan.position_at(s);
    state.heading = plan.heading_at(s);
    state.kind = VehicleKind::ground;
    return state;
}

VehicleState step_ground(const VehicleState &state, const RoutePlan &plan, const GroundMotionParams &params,
                         double dt)
{
    if (!(dt > 0.0))
        throw std::invalid_argument("Time step must be positive.");

    const double length = plan.length();
    const double s = state.route_s;

    double target = params.v_max;
    for (double sv : plan.sharp_vertices(kCornerTurnThreshold))
    {
        double ahead = sv - s;
        if (plan.loop() && ahead < 0.0)
            ahead += length;
        if (ahead >= 0.0 && ahead <= kCornerLookahead)
        {
            target = std::min(target, params.corner_speed);
            break;
        }
    }
    if (!plan.loop())
        target = std::min(target, stopping_speed(length - s, params.b_max, dt));

    const double v0 = state.speed;
    const double v = v0 < target ? std::min(target, v0 + params.a_max * dt) : std::max(target, v0 - params.b_max * dt);

    VehicleState next = state;
    next.speed = v;
    double s_new = s + v * dt;
    if (plan.loop())
    {
        if (length > 0.0)
            s_new = std::fmod(s_new, length);
    }
    else if (s_new >= length)
    {
        // Exact arrival keeps its speed for one step; an overshoot halts at the final vertex.
        if (s_new > length + 1e-9)
            next.speed = 0.0;
        s_new = length;
    }
    next.route_s = s_new;
    next.position = plan.position_at(s_new);
    next.heading = plan.heading_at(s_new);
    next.kind = VehicleKind::ground;
    return next;
}

VehicleState step_uav_follower(const VehicleState &uav, const VehicleState &target, const Vec3 &align_to,
                               const UavFollowerParams &params, double dt, const TerrainGrid *terrain)
{
    if (!(dt > 0.0))
        throw std::invalid_argument("Time step must be positive.");
    params.validate();

    const double c = std::cos(target.heading), s = std::sin(target.heading);
    const double ox = params.horizontal_offset.x(), oy = params.horizontal_offset.y();
    const double x = target.position.x() + c * ox - s * oy;
    const double y = target.position.y() + s * ox + c * oy;

    double ground = 0.0;
    if (terrain)
    {
        try
        {
            ground = terrain_height_at(*terrain, target.position.x(), target.position.y());
        }
        catch (const TerrainError &)
        {
            ground = 0.0;
        }
    }

    VehicleState next = uav;
    next.kind = VehicleKind::uav;
    const Vec3 pos(x, y, ground + params.altitude);
    next.speed = (pos - uav.position).horizontal_norm() / dt;
    next.position = pos;
    const double dx = align_to.x() - x, dy = align_to.y() - y;
    if (std::hypot(dx, dy) > 1e-9)
        next.heading = std::atan2(dy, dx);
    return next;
}

} // namespace rissim
