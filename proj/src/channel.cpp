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

#include "rissim/channel.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rissim
{

void RadioParams::validate() const
{
    if (!(fc_ghz > 0.0))
        throw std::invalid_argument("Carrier frequency must be positive.");
    if (!(gain_tx > 0.0) || !(gain_rx > 0.0))
        throw std::invalid_argument("Antenna gains must be positive.");
    if (!(link_budget_db > 0.0))
        throw std::invalid_argument("Link budget must be positive.");
    if (!std::isfinite(h_bs) || !std::isfinite(h_ut))
        throw std::invalid_argument("Antenna heights must be finite.");
}

double umi_los_pathloss(double d3d, const RadioParams &params)
{
    const double d = std::max(d3d, 1.0);
    const double fc_hz = params.fc_ghz * 1e9;
    // Effective antenna heights with 1 m environment height (TR 38.901 Table 7.4.1-1, note 1).
    const double d_bp = 4.0 * (params.h_bs - 1.0) * (params.h_ut - 1.0) * fc_hz / kSpeedOfLight;

    if (d < d_bp)
        return 32.4 + 21.0 * std::log10(d) + 20.0 * std::log10(params.fc_ghz);

    const double dh = params.h_bs - params.h_ut;
    return 32.4 + 40.0 * std::log10(d) + 20.0 * std::log10(params.fc_ghz) - 9.5 * std::log10(d_bp * d_bp + dh * dh);
}

double umi_nlos_pathloss(double d3d, const RadioParams &params)
{
    const double d = std::max(d3d, 1.0);
    const double nlos =
        35.3 * std::log10(d) + 22.4 + 21.3 * std::log10(params.fc_ghz) - 0.3 * (params.h_ut - 1.5);
    return std::max(umi_los_pathloss(d, params), nlos);
}

double ris_far_field_distance(const RisPanel &panel, const RadioParams &params)
{
    const double side = std::max(panel.width(), panel.height());
    return 2.0 * side * side / params.wavelength();
}

double ris_pathloss(double d1, double d2, double theta_i, const RisPanel &panel, const RadioParams &params)
{
    if (!(theta_i < std::numbers::pi / 2.0))
        throw GrazingIncidence("RIS incidence angle must be below 90 degrees.");
    const double d_ff = ris_far_field_distance(panel, params);
    if (d1 < d_ff || d2 < d_ff)
        throw NearFieldViolation("RIS panel " + panel.id() + " is inside its far-field distance.");

    const double area = panel.width() * panel.height() * std::cos(theta_i);
    const double gain = params.gain_tx * params.gain_rx * area * area /
                        (16.0 * std::numbers::pi * std::numbers::pi * d1 * d1 * d2 * d2);
    return -10.0 * std::log10(gain);
}

PathSelection evaluate_link(const World &world, const Vec3 &tx, const Vec3 &rx, std::span<const RisPanel> panels,
                            const RadioParams &params)
{
    if (tx == rx)
        throw std::invalid_argument("Transmitter and receiver must be distinct.");

    PathSelection sel;
    sel.direct_d3d = distance3d(tx, rx);
    sel.condition = has_los(world, tx, rx) ? Condition::los : Condition::nlos;
    if (sel.condition == Condition::los)
        sel.candidates.push_back({PathKind::direct_los, umi_los_pathloss(sel.direct_d3d, params), {}, 0, 0, 0});
    else
        sel.candidates.push_back({PathKind::direct_nlos, umi_nlos_pathloss(sel.direct_d3d, params), {}, 0, 0, 0});

    std::vector<const RisPanel *> ordered;
    ordered.reserve(panels.size());
    for (const auto &p : panels)
        ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(), [](const auto *a, const auto *b) { return a->id() < b->id(); });

    for (const RisPanel *panel : ordered)
    {
        if (panel->position() == tx || panel->position() == rx)
            continue;
        if (!is_available(world, *panel, tx, rx))
            continue;
        const double d1 = distance3d(tx, panel->position());
        const double d2 = distance3d(panel->position(), rx);
        const double theta = incidence_angle(*panel, tx);
        try
        {
            sel.candidates.push_back({PathKind::ris, ris_pathloss(d1, d2, theta, *panel, params), panel->id(), d1, d2,
                                      theta});
        }
        catch (const NearFieldViolation &)
        {
            spdlog::debug("RIS panel {} skipped: inside far-field distance (d1={:.2f} m, d2={:.2f} m)", panel->id(),
                          d1, d2);
            sel.skipped_near_field.push_back(panel->id());
        }
        catch (const GrazingIncidence &)
        {
            spdlog::debug("RIS panel {} skipped: grazing incidence", panel->id());
        }
    }

    for (std::size_t i = 1; i < sel.candidates.size(); ++i)
        if (sel.candidates[i].path_loss_db < sel.candidates[sel.selected].path_loss_db)
            sel.selected = i;
    return sel;
}

const char *to_string(Condition c) { return c == Condition::los ? "LOS" : "NLOS"; }

const char *to_string(PathKind k)
{
    switch (k)
    {
    case PathKind::direct_los:
        return "direct_los";
    case PathKind::direct_nlos:
        return "direct_nlos";
    case PathKind::ris:
        return "ris";
    }
    return "unknown";
}

} // namespace rissim
