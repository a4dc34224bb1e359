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

#ifndef RISSIM_SAMPLES_HPP
#define RISSIM_SAMPLES_HPP

#include "rissim/channel.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

class SampleFormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct PathLossSample
{
    double t = 0.0; // s
    std::string link_id;
    Condition condition = Condition::los; // of the direct path
    PathKind selected_kind = PathKind::direct_los;
    double path_loss_db = 0.0;
    std::optional<std::string> selected_panel;
    double direct_d3d = 0.0; // m
};

// Samples in tick order; within a tick, links in config order.
using SampleLog = std::vector<PathLossSample>;

inline constexpr const char *kSamplesHeader = "t,link_id,condition,selected_kind,selected_panel,path_loss_db,direct_d3d_m";

// Fixed-point with 6 decimals; an absent panel is an empty field.
void write_samples_csv(std::ostream &out, const SampleLog &log);
SampleLog read_samples_csv(std::istream &in);

Condition condition_from_string(const std::string &s);
PathKind path_kind_from_string(const std::string &s);

} // namespace rissim

#endif
