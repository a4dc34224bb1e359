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

#ifndef RISSIM_SCENARIO_HPP
#define RISSIM_SCENARIO_HPP

#include "rissim/channel.hpp"
#include "rissim/geometry.hpp"
#include "rissim/ingest.hpp"
#include "rissim/mobility.hpp"
#include "rissim/ris.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Which panels take part in a run.
enum class Deployment
{
    none,        // direct path only
    static_only, // panels without a carrier
    static_uav   // all panels, including mounted ones
};

const char *to_string(Deployment d);
Deployment deployment_from_string(const std::string &s); // throws ConfigError

struct InlineMap
{
    std::vector<Building> buildings;
    std::map<NodeId, Point2> road_nodes;
    std::vector<std::vector<NodeId>> road_ways;
};

struct MapSource
{
    std::optional<std::filesystem::path> osm; // resolved against the config directory
    std::optional<GeoProjection> projection;  // required with osm
    InlineMap inline_map;
};

struct NodeConfig
{
    std::string id;
    VehicleKind kind = VehicleKind::fixed;
    double antenna_height = 0.0; // added to the node position for link endpoints

    Vec3 position{}; // fixed nodes

    // ground
    std::vector<NodeId> route;                              // explicit node sequence, or
    std::optional<std::pair<NodeId, NodeId>> route_between; // shortest route from/to
    bool loop = false;
    double start_offset = 0.0;
    double initial_speed = 0.0;
    GroundMotionParams motion;

    // uav
    std::string target;
    std::string align_to;
    UavFollowerParams follower;
};

struct PanelConfig
{
    std::string id;
    bool mounted = false;
    double width = 0.5;
    double height = 0.5;

    // static
    Vec3 position{};
    Vec3 normal{1.0, 0.0, 0.0};

    // mounted
    MountSpec mount;
    std::optional<std::string> align_to; // node id; defaults to the carrier heading
};

struct LinkConfig
{
    std::string id;
    std::string tx;
    std::string rx;
};

struct ScenarioConfig
{
    MapSource map;
    std::optional<std::filesystem::path> dem;
    RadioParams radio;
    std::vector<NodeConfig> nodes;
    std::vector<PanelConfig> panels;
    std::vector<LinkConfig> links;
    double duration = 0.0;
    double tick = 0.1;
    Deployment deployment = Deployment::static_uav;

    const NodeConfig &node(const std::string &id) const;
};

// Strict JSON parsing: unknown keys, wrong types and dangling references raise ConfigError.
// Relative file paths are resolved against base_dir.
ScenarioConfig parse_scenario_text(const std::string &text, const std::filesystem::path &base_dir = {});
ScenarioConfig load_scenario(const std::filesystem::path &path);

// Cross-reference checks; the parsers call this.
void validate_scenario(const ScenarioConfig &config);

// Loads OSM / DEM content or builds the inline map. Throws IngestError.
World load_world(const ScenarioConfig &config);

} // namespace rissim

#endif
