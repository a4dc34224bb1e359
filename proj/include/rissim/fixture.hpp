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

#ifndef RISSIM_FIXTURE_HPP
#define RISSIM_FIXTURE_HPP

#include "rissim/scenario.hpp"

#include <string>

namespace rissim
{

// Synthetic street canyon: a 400 m street between two building rows with a side street branching
// north at x = 200 m. The base station sits at the west end (10 m), the car drives east and turns
// into the side street, a 0.5 m x 0.5 m panel on the far corner faces the base station, and
// optionally a UAV carries a second panel 60 m above the car with 30 degrees downtilt.
struct CanyonOptions
{
    bool with_uav = true;
    Deployment deployment = Deployment::static_uav;
    double duration = 70.0;
    double tick = 0.1;
};

// Self-contained scenario config as JSON text.
std::string canyon_fixture_json(const CanyonOptions &options = {});

} // namespace rissim

#endif
