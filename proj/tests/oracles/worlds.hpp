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

#ifndef RISSIM_TEST_WORLDS_HPP
#define RISSIM_TEST_WORLDS_HPP

#include "oracles.hpp"

#include "rissim/channel.hpp"
#include "rissim/geometry.hpp"
#include "rissim/ris.hpp"

#include <random>
#include <vector>

namespace testkit
{

rissim::Building box_building(std::int64_t id, double x0, double y0, double x1, double y1, double height);

oracle::P3 to_p3(const rissim::Vec3 &v);
oracle::Box to_box(const rissim::Building &b);
std::vector<oracle::Box> to_boxes(const rissim::World &world);
oracle::Panel to_panel(const rissim::RisPanel &p);
std::vector<oracle::Panel> to_panels(const std::vector<rissim::RisPanel> &panels);
oracle::Radio to_radio(const rissim::RadioParams &r);

// Up to max_boxes axis-aligned boxes inside [0, 200]^2, heights 5..40 m.
rissim::World random_box_world(std::mt19937_64 &rng, int max_boxes);

// Uniform point in [0, 200]^2 x [0, 50].
rissim::Vec3 random_point(std::mt19937_64 &rng);

rissim::Vec3 random_unit(std::mt19937_64 &rng);

} // namespace testkit

#endif
