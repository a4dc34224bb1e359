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

#ifndef RISSIM_SIM_HPP
#define RISSIM_SIM_HPP

#include "rissim/samples.hpp"
#include "rissim/scenario.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

class TraceFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Node states at one tick, in config node order.
struct Snapshot
{
    double t = 0.0;
    std::vector<VehicleState> states;
};

using Trajectory = std::vector<Snapshot>;

struct TraceRow
{
    double t = 0.0;
    std::string node_id;
    Vec3 position;
};

using PositionTrace = std::vector<TraceRow>;

inline constexpr const char *kTraceHeader = "t,node_id,x,y,z";

// Ticks k = 0 .. floor(duration / tick), t = k * tick. Ground vehicles step first, then UAV
// followers, both in config order. Throws ConfigError for routes the map cannot serve.
Trajectory simulate_mobility(const ScenarioConfig &config, const World &world);

// Rows are grouped by timestamp. Ground and static nodes must appear in the first group and keep
// their last position when absent later; UAVs absent from a group follow their target. Ground
// headings are taken from the direction of travel.
Trajectory trajectory_from_trace(const ScenarioConfig &config, const World &world, const PositionTrace &trace);

// Panels of the chosen deployment; mounted poses follow their carriers.
std::vector<RisPanel> panels_at(const ScenarioConfig &config, const Snapshot &snapshot, Deployment deployment);

SampleLog evaluate_trajectory(const ScenarioConfig &config, const World &world, const Trajectory &trajectory,
                              Deployment deployment);

SampleLog run_scenario(const ScenarioConfig &config, const World &world);
SampleLog run_scenario(const ScenarioConfig &config);

SampleLog replay_positions(const ScenarioConfig &config, const World &world, const PositionTrace &trace);
SampleLog replay_positions(const ScenarioConfig &config, const PositionTrace &trace);

PositionTrace to_position_trace(const ScenarioConfig &config, const Trajectory &trajectory);

// Coordinates are written in shortest round-trip form, so a trace read back is bit-identical.
void write_position_trace(std::ostream &out, const PositionTrace &trace);
PositionTrace read_position_trace(std::istream &in);

} // namespace rissim

#endif
