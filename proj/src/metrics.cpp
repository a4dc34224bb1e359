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

#include "rissim/metrics.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace rissim
{

Ecdf::Ecdf(std::vector<double> samples)
{
    if (samples.empty())
        throw EmptyInputError("ECDF of an empty sample set");
    std::sort(samples.begin(), samples.end());
    n_ = samples.size();
    for (std::size_t i = 0; i < n_; ++i)
    {
        if (i + 1 < n_ && samples[i + 1] == samples[i])
            continue;
        values_.push_back(samples[i]);
        fractions_.push_back(static_cast<double>(i + 1) / static_cast<double>(n_));
    }
}

double Ecdf::fraction_at(double v) const
{
    const auto it = std::upper_bound(values_.begin(), values_.end(), v);
    if (it == values_.begin())
        return 0.0;
    return fractions_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

Ecdf ecdf(std::vector<double> values) { return Ecdf(std::move(values)); }

std::vector<double> path_losses(const SampleLog &log)
{
    std::vector<double> out;
    out.reserve(log.size());
    for (const auto &s : log)
        out.push_back(s.path_loss_db);
    return out;
}

SampleLog filter_link(const SampleLog &log, const std::string &link_id)
{
    SampleLog out;
    std::copy_if(log.begin(), log.end(), std::back_inserter(out),
                 [&](const PathLossSample &s) { return s.link_id == link_id; });
    return out;
}

std::vector<std::string> link_ids(const SampleLog &log)
{
    std::vector<std::string> ids;
    for (const auto &s : log)
        if (std::find(ids.begin(), ids.end(), s.link_id) == ids.end())
            ids.push_back(s.link_id);
    return ids;
}

double outage_fraction(const SampleLog &log, double budget_db)
{
    if (log.empty())
        throw EmptyInputError("outage fraction of an empty log");
    const auto n = std::count_if(log.begin(), log.end(),
                                 [&](const PathLossSample &s) { return s.path_loss_db > budget_db; });
    return static_cast<double>(n) / static_cast<double>(log.size());
}

double nlos_fraction(const SampleLog &log)
{
    if (log.empty())
        throw EmptyInputError("NLOS fraction of an empty log");
    const auto n = std::count_if(log.begin(), log.end(),
                                 [](const PathLossSample &s) { return s.condition == Condition::nlos; });
    return static_cast<double>(n) / static_cast<double>(log.size());
}

std::map<std::string, double> gain_area_by_link(const SampleLog &baseline, const SampleLog &enhanced)
{
    if (baseline.size() != enhanced.size())
        throw TimestampMismatchError(
            fmt::format("logs differ in length ({} vs {} samples)", baseline.size(), enhanced.size()));
    for (std::size_t i = 0; i < baseline.size(); ++i)
        if (baseline[i].t != enhanced[i].t || baseline[i].link_id != enhanced[i].link_id)
            throw TimestampMismatchError(fmt::format("sample {} differs: ({}, {}) vs ({}, {})", i, baseline[i].t,
                                                     baseline[i].link_id, enhanced[i].t, enhanced[i].link_id));

    std::map<std::string, double> area;
    std::map<std::string, std::size_t> previous;
    for (std::size_t i = 0; i < baseline.size(); ++i)
    {
        const std::string &id = baseline[i].link_id;
        area.try_emplace(id, 0.0);
        if (const auto it = previous.find(id); it != previous.end())
        {
            const std::size_t j = it->second;
            const double dt = baseline[i].t - baseline[j].t;
            if (!(dt > 0.0))
                throw TimestampMismatchError("timestamps of link '" + id + "' do not increase");
            area[id] += std::max(0.0, baseline[j].path_loss_db - enhanced[j].path_loss_db) * dt;
        }
        previous[id] = i;
    }
    return area;
}

double gain_area(const SampleLog &baseline, const SampleLog &enhanced)
{
    const auto by_link = gain_area_by_link(baseline, enhanced);
    return std::accumulate(by_link.begin(), by_link.end(), 0.0,
                           [](double acc, const auto &kv) { return acc + kv.second; });
}

std::vector<LinkSummary> summarize(const SampleLog &log, double budget_db)
{
    if (log.empty())
        throw EmptyInputError("summary of an empty log");

    auto make = [&](const std::string &id, const SampleLog &part)
    {
        const auto pl = path_losses(part);
        const auto [lo, hi] = std::minmax_element(pl.begin(), pl.end());
        return LinkSummary{id,
                           part.size(),
                           outage_fraction(part, budget_db),
                           nlos_fraction(part),
                           *lo,
                           *hi,
                           std::accumulate(pl.begin(), pl.end(), 0.0) / static_cast<double>(pl.size())};
    };

    std::vector<LinkSummary> out;
    for (const auto &id : link_ids(log))
        out.push_back(make(id, filter_link(log, id)));
    out.push_back(make("*", log));
    return out;
}

} // namespace rissim
