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

#ifndef RISSIM_CHANNEL_HPP
#define RISSIM_CHANNEL_HPP

#include "rissim/geometry.hpp"
#include "rissim/ris.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

struct RadioParams
{
    double fc_ghz = 28.0;
    double gain_tx = 1.0; // linear
    double gain_rx = 1.0; // linear
    double h_bs = 10.0;   // m
    double h_ut = 1.5;    // m
    double link_budget_db = 142.0;

    double wavelength() const { return kSpeedOfLight / (fc_ghz * 1e9); }
    void validate() const;
};

class NearFieldViolation : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class GrazingIncidence : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Condition
{
    los,
    nlos
};

enum class PathKind
{
    direct_los,
    direct_nlos,
    ris
};

struct PathCandidate
{
    PathKind kind = PathKind::direct_los;
    double path_loss_db = 0.0;
    std::optional<std::string> panel_id; // ris only
    double d1 = 0.0;                     // tx -> panel, ris only
    double d2 = 0.0;                     // panel -> rx, ris only
    double theta_i = 0.0;                // ris only
};

struct PathSelection
{
    Condition condition = Condition::los;
    double direct_d3d = 0.0;
    std::vector<PathCandidate> candidates; // direct path first, then panels in ascending id order
    std::size_t selected = 0;
    std::vector<std::string> skipped_near_field;

    const PathCandidate &best() const { return candidates.at(selected); }
};

// 3GPP TR 38.901 UMi street canyon, LOS. Distances below 1 m use the 1 m value.
// The breakpoint is compared against the 3D distance.
double umi_los_pathloss(double d3d, const RadioParams &params);

// 3GPP TR 38.901 UMi street canyon, NLOS, lower-bounded by the LOS value.
double umi_nlos_pathloss(double d3d, const RadioParams &params);

// Far-field distance below which the panel is not treated as a point scatterer: 2 max(a, b)^2 / lambda.
double ris_far_field_distance(const RisPanel &panel, const RadioParams &params);

// Ideally phased (anomalous mirror) RIS in the far field:
//   PL = -10 log10( Gt Gr (a b cos theta_i)^2 / (16 pi^2 d1^2 d2^2) )
// Throws NearFieldViolation or GrazingIncidence outside the model's validity.
double ris_pathloss(double d1, double d2, double theta_i, const RisPanel &panel, const RadioParams &params);

// Direct path plus one first-order reflection per available panel; the minimum loss is selected,
// ties going to the direct path and then to the smaller panel id. Panels too close for the
// far-field model are skipped and reported.
PathSelection evaluate_link(const World &world, const Vec3 &tx, const Vec3 &rx, std::span<const RisPanel> panels,
                            const RadioParams &params);

const char *to_string(Condition c);
const char *to_string(PathKind k);

} // namespace rissim

#endif
