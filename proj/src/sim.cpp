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

#include "rissim/sim.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

namespace rissim
{

namespace
{

Vec3 endpoint(const NodeConfig &node, const VehicleState &state)
{
    return state.position + Vec3(0.0, 0.0, node.antenna_height);
}

std::map<std::string, std::size_t> node_index(const ScenarioConfig &config)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < config.nodes.size(); ++i)
        index.emplace(config.nodes[i].id, i);
    return index;
}

RoutePlan make_route(const NodeConfig &node, const World &world)
{
    try
    {
        if (node.route_between)
            return shortest_route(world.roads(), node.route_between->first, node.route_between->second);
        if (node.loop && node.route.front() != node.route.back())
            throw ConfigError("node '" + node.id + "': a looped route must end where it starts");
        return RoutePlan(world.roads(), node.route, node.loop);
    }
    catch (const UnreachableError &e)
    {
        throw ConfigError("node '" + node.id + "': " + e.what());
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("node '" + node.id + "': " + e.what());
    }
    catch (const std::out_of_range &e)
    {
        throw ConfigError("node '" + node.id + "': " + e.what());
    }
}

const TerrainGrid *terrain_of(const World &world)
{
    return world.terrain() ? &*world.terrain() : nullptr;
}

// Places or advances every UAV follower in config order.
void update_followers(const ScenarioConfig &config, const World &world, const std::map<std::string, std::size_t> &index,
                      std::vector<VehicleState> &states, const std::vector<bool> &skip, bool initial)
{
    for (std::size_t i = 0; i < config.nodes.size(); ++i)
    {
        const NodeConfig &n = config.nodes[i];
        if (n.kind != VehicleKind::uav || skip[i])
            continue;
        const std::size_t target = index.at(n.target);
        const std::size_t align = index.at(n.align_to);
        states[i] = step_uav_follower(states[i], states[target], endpoint(config.nodes[align], states[align]),
                                      n.follower, config.tick, terrain_of(world));
        if (initial)
            states[i].speed = 0.0;
    }
}

std::size_t tick_count(const ScenarioConfig &config)
{
    return static_cast<std::size_t>(std::floor(config.duration / config.tick + 1e-9)) + 1;
}

double parse_trace_number(const std::string &s, std::size_t line_no)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw TraceFormatError(fmt::format("line {}: '{}' is not a number", line_no, s));
    return v;
}

} // namespace

Trajectory simulate_mobility(const ScenarioConfig &config, const World &world)
{
    validate_scenario(config);
    const auto index = node_index(config);

    std::vector<std::optional<RoutePlan>> plans(config.nodes.size());
    std::vector<VehicleState> states(config.nodes.size());
    for (std::size_t i = 0; i < config.nodes.size(); ++i)
    {
        const NodeConfig &n = config.nodes[i];
        states[i].id = n.id;
        states[i].kind = n.kind;
        if (n.kind == VehicleKind::fixed)
        {
            states[i].position = n.position;
        }
        else if (n.kind == VehicleKind::ground)
        {
            plans[i] = make_route(n, world);
            if (!plans[i]->loop() && n.start_offset > plans[i]->length())
                throw ConfigError("node '" + n.id + "': start offset exceeds the route length");
            states[i] = place_on_route(states[i], *plans[i], n.start_offset);
            states[i].speed = std::min(n.initial_speed, n.motion.v_max);
        }
    }
    const std::vector<bool> none(config.nodes.size(), false);
    update_followers(config, world, index, states, none, true);

    const std::size_t ticks = tick_count(config);
    Trajectory out;
    out.reserve(ticks);
    out.push_back({0.0, states});
    for (std::size_t k = 1; k < ticks; ++k)
    {
        for (std::size_t i = 0; i < config.nodes.size(); ++i)
            if (plans[i])
                states[i] = step_ground(states[i], *plans[i], config.nodes[i].motion, config.tick);
        update_followers(config, world, index, states, none, false);
        out.push_back({static_cast<double>(k) * config.tick, states});
    }
    return out;
}

Trajectory trajectory_from_trace(const ScenarioConfig &config, const World &world, const PositionTrace &trace)
{
    validate_scenario(config);
    const auto index = node_index(config);
    if (trace.empty())
        throw TraceFormatError("position trace is empty");

    std::vector<VehicleState> states(config.nodes.size());
    for (std::size_t i = 0; i < config.nodes.size(); ++i)
    {
        states[i].id = config.nodes[i].id;
        states[i].kind = config.nodes[i].kind;
        if (config.nodes[i].kind == VehicleKind::fixed)
            states[i].position = config.nodes[i].position;
    }

    Trajectory out;
    std::size_t row = 0;
    while (row < trace.size())
    {
        const double t = trace[row].t;
        if (!out.empty() && !(t > out.back().t))
            throw TraceFormatError(fmt::format("trace timestamps must increase (t = {} after {})", t, out.back().t));

        std::vector<bool> seen(config.nodes.size(), false);
        for (; row < trace.size() && trace[row].t == t; ++row)
        {
            const auto it = index.find(trace[row].node_id);
            if (it == index.end())
                throw TraceFormatError("trace references unknown node '" + trace[row].node_id + "'");
            const std::size_t i = it->second;
            if (seen[i])
                throw TraceFormatError(fmt::format("node '{}' appears twice at t = {}", trace[row].node_id, t));
            seen[i] = true;

            VehicleState &s = states[i];
            const Vec3 p = trace[row].position;
            if (!out.empty())
            {
                const double dt = t - out.back().t;
                const Vec3 d = p - s.position;
                s.speed = d.horizontal_norm() / dt;
                if (s.kind == VehicleKind::ground && d.horizontal_norm() > 1e-9)
                    s.heading = std::atan2(d.y(), d.x());
            }
            s.position = p;
        }
        if (out.empty())
        {
            for (std::size_t i = 0; i < config.nodes.size(); ++i)
                if (config.nodes[i].kind == VehicleKind::ground && !seen[i])
                    throw TraceFormatError("ground node '" + config.nodes[i].id + "' is missing from the first trace row group");
        }
        else
        {
            for (std::size_t i = 0; i < config.nodes.size(); ++i)
                if (!seen[i] && config.nodes[i].kind != VehicleKind::uav)
                    states[i].speed = 0.0;
        }

        // Followers absent from the trace track their target; present ones only take the yaw law.
        for (std::size_t i = 0; i < config.nodes.size(); ++i)
        {
            const NodeConfig &n = config.nodes[i];
            if (n.kind != VehicleKind::uav)
                continue;
            const std::size_t align = index.at(n.align_to);
            const Vec3 a = endpoint(config.nodes[align], states[align]);
            if (seen[i])
            {
                const double dx = a.x() - states[i].position.x(), dy = a.y() - states[i].position.y();
                if (std::hypot(dx, dy) > 1e-9)
                    states[i].heading = std::atan2(dy, dx);
            }
            else
            {
                const double dt = out.empty() ? config.tick : t - out.back().t;
                states[i] = step_uav_follower(states[i], states[index.at(n.target)], a, n.follower, dt,
                                              terrain_of(world));
                if (out.empty())
                    states[i].speed = 0.0;
            }
        }
        out.push_back({t, states});
    }
    return out;
}

std::vector<RisPanel> panels_at(const ScenarioConfig &config, const Snapshot &snapshot, Deployment deployment)
{
    std::vector<RisPanel> panels;
    if (deployment == Deployment::none)
        return panels;
    const auto index = node_index(config);
    for (const PanelConfig &p : config.panels)
    {
        if (!p.mounted)
        {
            panels.emplace_back(p.id, p.position, p.normal, p.width, p.height);
            continue;
        }
        if (deployment != Deployment::static_uav)
            continue;
        const VehicleState &carrier = snapshot.states.at(index.at(p.mount.carrier));
        PanelPose pose = panel_pose_from_mount(carrier, p.mount, carrier.position);
        if (p.align_to)
        {
            const std::size_t a = index.at(*p.align_to);
            pose = panel_pose_from_mount(carrier, p.mount, endpoint(config.nodes[a], snapshot.states[a]));
        }
        else
        {
            pose = panel_pose_from_mount(carrier, p.mount, pose.position);
        }
        panels.emplace_back(p.id, pose.position, pose.normal, p.width, p.height, p.mount.carrier);
    }
    return panels;
}

SampleLog evaluate_trajectory(const ScenarioConfig &config, const World &world, const Trajectory &trajectory,
                              Deployment deployment)
{
    const auto index = node_index(config);
    SampleLog log;
    log.reserve(trajectory.size() * config.links.size());
    for (const Snapshot &snap : trajectory)
    {
        const std::vector<RisPanel> panels = panels_at(config, snap, deployment);
        for (const LinkConfig &link : config.links)
        {
            const std::size_t a = index.at(link.tx), b = index.at(link.rx);
            const Vec3 tx = endpoint(config.nodes[a], snap.states[a]);
            const Vec3 rx = endpoint(config.nodes[b], snap.states[b]);
            const PathSelection sel = evaluate_link(world, tx, rx, panels, config.radio);
            const PathCandidate &best = sel.best();
            log.push_back({snap.t, link.id, sel.condition, best.kind, best.path_loss_db, best.panel_id,
                           sel.direct_d3d});
        }
    }
    return log;
}

SampleLog run_scenario(const ScenarioConfig &config, const World &world)
{
    const Trajectory trajectory = simulate_mobility(config, world);
    spdlog::debug("simulated {} ticks for {} nodes", trajectory.size(), config.nodes.size());
    return evaluate_trajectory(config, world, trajectory, config.deployment);
}

SampleLog run_scenario(const ScenarioConfig &config)
{
    validate_scenario(config);
    return run_scenario(config, load_world(config));
}

SampleLog replay_positions(const ScenarioConfig &config, const World &world, const PositionTrace &trace)
{
    return evaluate_trajectory(config, world, trajectory_from_trace(config, world, trace), config.deployment);
}

SampleLog replay_positions(const ScenarioConfig &config, const PositionTrace &trace)
{
    validate_scenario(config);
    return replay_positions(config, load_world(config), trace);
}

PositionTrace to_position_trace(const ScenarioConfig &config, const Trajectory &trajectory)
{
    PositionTrace trace;
    for (const Snapshot &snap : trajectory)
        for (std::size_t i = 0; i < config.nodes.size(); ++i)
            trace.push_back({snap.t, config.nodes[i].id, snap.states[i].position});
    return trace;
}

void write_position_trace(std::ostream &out, const PositionTrace &trace)
{
    out << kTraceHeader << '\n';
    for (const TraceRow &r : trace)
        fmt::print(out, "{},{},{},{},{}\n", r.t, r.node_id, r.position.x(), r.position.y(), r.position.z());
}

PositionTrace read_position_trace(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw TraceFormatError("position trace is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kTraceHeader)
        throw TraceFormatError("unexpected trace header '" + line + "'");

    PositionTrace trace;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (std::size_t comma; (comma = line.find(',', start)) != std::string::npos; start = comma + 1)
            f.push_back(line.substr(start, comma - start));
        f.push_back(line.substr(start));
        if (f.size() != 5)
            throw TraceFormatError(fmt::format("line {}: expected 5 fields, got {}", line_no, f.size()));
        TraceRow r{parse_trace_number(f[0], line_no), f[1],
                   Vec3(parse_trace_number(f[2], line_no), parse_trace_number(f[3], line_no),
                        parse_trace_number(f[4], line_no))};
        if (!trace.empty() && r.t < trace.back().t)
            throw TraceFormatError(fmt::format("line {}: timestamp {} precedes {}", line_no, r.t, trace.back().t));
        trace.push_back(std::move(r));
    }
    return trace;
}

} // namespace rissim
