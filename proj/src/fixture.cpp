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

#include "rissim/fixture.hpp"

#include "json.hpp"

namespace rissim
{

std::string canyon_fixture_json(const CanyonOptions &options)
{
    using nlohmann::ordered_json;
    auto building = [](int id, double x0, double y0, double x1, double y1)
    {
        return ordered_json{{"id", id},
                            {"footprint", {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}},
                            {"height_m", 10.0}};
    };

    ordered_json map;
    map["buildings"] = {building(1, -20.0, -40.0, 420.0, -10.0), building(2, -20.0, 10.0, 190.0, 420.0),
                        building(3, 210.0, 10.0, 420.0, 420.0)};
    map["roads"] = {{"nodes",
                     {{{"id", 1}, {"position", {10.0, 0.0}}},
                      {{"id", 2}, {"position", {200.0, 0.0}}},
                      {{"id", 3}, {"position", {400.0, 0.0}}},
                      {{"id", 4}, {"position", {200.0, 360.0}}}}},
                    {"ways", {{1, 2, 3}, {2, 4}}}};

    ordered_json nodes = ordered_json::array();
    nodes.push_back({{"id", "bs"}, {"kind", "static"}, {"position", {0.0, 0.0, 10.0}}, {"antenna_height_m", 0.0}});
    nodes.push_back({{"id", "car"},
                     {"kind", "ground"},
                     {"route", {{"from", 1}, {"to", 4}}},
                     {"antenna_height_m", 1.5},
                     {"motion",
                      {{"v_max_mps", 10.0}, {"a_max_mps2", 2.0}, {"b_max_mps2", 3.0}, {"corner_speed_mps", 4.0}}}});

    ordered_json panels = ordered_json::array();
    panels.push_back({{"id", "ris_corner"},
                      {"kind", "static"},
                      {"position", {200.0, -9.9, 6.0}},
                      {"aim_at", {0.0, 0.0, 10.0}},
                      {"width_m", 0.5},
                      {"height_m", 0.5}});

    if (options.with_uav)
    {
        nodes.push_back({{"id", "uav"},
                         {"kind", "uav"},
                         {"target", "car"},
                         {"align_to", "bs"},
                         {"altitude_m", 60.0},
                         {"offset", {0.0, 0.0}}});
        panels.push_back({{"id", "ris_uav"},
                          {"kind", "mounted"},
                          {"carrier", "uav"},
                          {"downtilt_deg", 30.0},
                          {"align_to", "bs"},
                          {"width_m", 0.5},
                          {"height_m", 0.5}});
    }

    ordered_json doc;
    doc["map"] = map;
    doc["radio"] = {{"fc_ghz", 28.0},  {"gain_tx", 1.0}, {"gain_rx", 1.0},
                    {"h_bs_m", 10.0},  {"h_ut_m", 1.5},  {"link_budget_db", 142.0}};
    doc["nodes"] = nodes;
    doc["panels"] = panels;
    doc["links"] = {{{"id", "bs-car"}, {"tx", "bs"}, {"rx", "car"}}};
    doc["duration_s"] = options.duration;
    doc["tick_s"] = options.tick;
    doc["deployment"] = to_string(options.deployment);
    return doc.dump(2) + "\n";
}

} // namespace rissim
