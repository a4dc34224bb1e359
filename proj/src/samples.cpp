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

#include "rissim/samples.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace rissim
{

namespace
{

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string &s, std::size_t line_no)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v))
        throw SampleFormatError(fmt::format("line {}: '{}' is not a number", line_no, s));
    return v;
}

} // namespace

Condition condition_from_string(const std::string &s)
{
    if (s == "LOS")
        return Condition::los;
    if (s == "NLOS")
        return Condition::nlos;
    throw SampleFormatError("unknown condition '" + s + "'");
}

PathKind path_kind_from_string(const std::string &s)
{
    if (s == "direct_los")
        return PathKind::direct_los;
    if (s == "direct_nlos")
        return PathKind::direct_nlos;
    if (s == "ris")
        return PathKind::ris;
    throw SampleFormatError("unknown path kind '" + s + "'");
}

void write_samples_csv(std::ostream &out, const SampleLog &log)
{
    out << kSamplesHeader << '\n';
    for (const auto &s : log)
        fmt::print(out, "{:.6f},{},{},{},{},{:.6f},{:.6f}\n", s.t, s.link_id, to_string(s.condition),
                   to_string(s.selected_kind), s.selected_panel.value_or(""), s.path_loss_db, s.direct_d3d);
}

SampleLog read_samples_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw SampleFormatError("samples file is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kSamplesHeader)
        throw SampleFormatError("unexpected samples header '" + line + "'");

    SampleLog log;
    std::size_t line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split(line);
        if (f.size() != 7)
            throw SampleFormatError(fmt::format("line {}: expected 7 fields, got {}", line_no, f.size()));
        PathLossSample s;
        s.t = parse_double(f[0], line_no);
        s.link_id = f[1];
        s.condition = condition_from_string(f[2]);
        s.selected_kind = path_kind_from_string(f[3]);
        if (!f[4].empty())
            s.selected_panel = f[4];
        s.path_loss_db = parse_double(f[5], line_no);
        s.direct_d3d = parse_double(f[6], line_no);
        log.push_back(std::move(s));
    }
    return log;
}

} // namespace rissim
