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

#include "rissim/ingest.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

namespace rissim
{

namespace
{

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Parses the leading number of strings like "12", "12.5 m" or " 7m".
std::optional<double> numeric_prefix(const std::string &text)
{
    const char *first = text.data();
    const char *last = text.data() + text.size();
    while (first != last && std::isspace(static_cast<unsigned char>(*first)))
        ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first || !std::isfinite(value))
        return std::nullopt;
    return value;
}

double building_height(const std::map<std::string, std::string> &tags)
{
    if (auto it = tags.find("height"); it != tags.end())
        if (auto h = numeric_prefix(it->second); h && *h > 0.0)
            return *h;
    if (auto it = tags.find("building:levels"); it != tags.end())
        if (auto levels = numeric_prefix(it->second); levels && *levels > 0.0)
            return *levels * kLevelHeight;
    return kDefaultBuildingHeight;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

// ---------- GeoProjection ----------

GeoProjection::GeoProjection(double ref_lat_deg, double ref_lon_deg)
    : ref_lat_(ref_lat_deg), ref_lon_(ref_lon_deg), cos_ref_(std::cos(ref_lat_deg * kDegToRad))
{
    if (!std::isfinite(ref_lat_deg) || !std::isfinite(ref_lon_deg) || std::abs(ref_lat_deg) >= 90.0)
        throw std::invalid_argument("Projection reference must be a finite latitude within (-90, 90).");
}

Point2 GeoProjection::project(double lat_deg, double lon_deg) const
{
    return {kEarthRadius * cos_ref_ * (lon_deg - ref_lon_) * kDegToRad,
            kEarthRadius * (lat_deg - ref_lat_) * kDegToRad};
}

std::pair<double, double> GeoProjection::unproject(Point2 p) const
{
    return {ref_lat_ + p.y / (kEarthRadius * kDegToRad), ref_lon_ + p.x / (kEarthRadius * cos_ref_ * kDegToRad)};
}

// ---------- OSM ----------

OsmContent parse_osm(std::istream &document, const GeoProjection &projection)
{
    namespace pt = boost::property_tree;

    const std::string text(std::istreambuf_iterator<char>(document), {});
    OsmContent out;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
        return out;

    pt::ptree tree;
    try
    {
        std::istringstream in(text);
        pt::read_xml(in, tree);
    }
    catch (const pt::xml_parser_error &e)
    {
        throw MalformedXmlError(std::string("malformed OSM XML: ") + e.what());
    }

    const auto osm = tree.get_child_optional("osm");
    if (!osm)
        throw MalformedXmlError("malformed OSM XML: missing <osm> root element");

    struct RawWay
    {
        std::int64_t id;
        std::vector<NodeId> refs;
        std::map<std::string, std::string> tags;
    };

    std::map<NodeId, std::pair<double, double>> nodes;
    std::vector<RawWay> ways;

    try
    {
        for (const auto &[name, child] : *osm)
        {
            if (name == "node")
            {
                const auto id = child.get<NodeId>("<xmlattr>.id");
                nodes[id] = {child.get<double>("<xmlattr>.lat"), child.get<double>("<xmlattr>.lon")};
            }
            else if (name == "way")
            {
                RawWay way{child.get<std::int64_t>("<xmlattr>.id"), {}, {}};
                for (const auto &[wname, wchild] : child)
                {
                    if (wname == "nd")
                        way.refs.push_back(wchild.get<NodeId>("<xmlattr>.ref"));
                    else if (wname == "tag")
                        way.tags[wchild.get<std::string>("<xmlattr>.k")] = wchild.get<std::string>("<xmlattr>.v");
                }
                ways.push_back(std::move(way));
            }
        }
    }
    catch (const pt::ptree_error &e)
    {
        throw MalformedXmlError(std::string("malformed OSM element: ") + e.what());
    }

    for (const auto &way : ways)
    {
        const bool is_building = way.tags.contains("building") && way.tags.at("building") != "no";
        const bool is_highway = way.tags.contains("highway");
        if (!is_building && !is_highway)
            continue;

        const bool resolved =
            std::all_of(way.refs.begin(), way.refs.end(), [&](NodeId r) { return nodes.contains(r); });
        if (!resolved)
        {
            spdlog::debug("OSM way {} references unknown nodes, skipped", way.id);
            ++out.warnings;
            continue;
        }

        if (is_building)
        {
            if (way.refs.size() < 4 || way.refs.front() != way.refs.back())
            {
                spdlog::debug("OSM building way {} is not a closed ring, skipped", way.id);
                ++out.warnings;
            }
            else
            {
                std::vector<Point2> ring;
                for (NodeId r : way.refs)
                {
                    const auto [lat, lon] = nodes.at(r);
                    ring.push_back(projection.project(lat, lon));
                }
                try
                {
                    out.buildings.emplace_back(way.id, Polygon2D(std::move(ring)), 0.0, building_height(way.tags));
                }
                catch (const std::invalid_argument &e)
                {
                    spdlog::debug("OSM building way {} has an invalid footprint ({}), skipped", way.id, e.what());
                    ++out.warnings;
                }
            }
        }

        if (is_highway && way.refs.size() >= 2)
        {
            OsmWay road{way.id, {}};
            for (NodeId r : way.refs)
            {
                const auto [lat, lon] = nodes.at(r);
                road.nodes.push_back({r, lat, lon});
            }
            out.road_ways.push_back(std::move(road));
        }
    }

    std::sort(out.buildings.begin(), out.buildings.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    std::sort(out.road_ways.begin(), out.road_ways.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    if (out.warnings > 0)
        spdlog::warn("OSM import skipped {} way(s)", out.warnings);
    return out;
}

RoadGraph build_road_graph(const std::vector<OsmWay> &ways, const GeoProjection &projection,
                           const TerrainGrid *terrain)
{
    RoadGraph graph;
    for (const auto &way : ways)
    {
        for (const auto &n : way.nodes)
        {
            if (graph.has_node(n.id))
                continue;
            const Point2 p = projection.project(n.lat, n.lon);
            double z = 0.0;
            if (terrain)
            {
                try
                {
                    z = terrain_height_at(*terrain, p.x, p.y);
                }
                catch (const TerrainError &)
                {
                    z = 0.0;
                }
            }
            graph.add_node(n.id, Vec3(p.x, p.y, z));
        }
        for (std::size_t i = 0; i + 1 < way.nodes.size(); ++i)
            graph.add_edge(way.nodes[i].id, way.nodes[i + 1].id);
    }
    return graph;
}

// ---------- ESRI ASCII grid ----------

TerrainGrid load_dem(std::istream &document)
{
    std::map<std::string, double> header;
    std::string token;

    // Header keys are alphabetic; the first numeric token starts the data block.
    std::vector<double> values;
    while (document >> token)
    {
        if (std::isalpha(static_cast<unsigned char>(token[0])))
        {
            std::string value;
            if (!(document >> value))
                throw HeaderMissingError("ESRI grid header key '" + token + "' has no value");
            const auto v = numeric_prefix(value);
            if (!v)
                throw HeaderMissingError("ESRI grid header key '" + token + "' has a non-numeric value");
            header[lower(token)] = *v;
            continue;
        }
        const auto v = numeric_prefix(token);
        if (!v)
            throw CountMismatchError("ESRI grid contains a non-numeric value '" + token + "'");
        values.push_back(*v);
        break;
    }
    while (document >> token)
    {
        const auto v = numeric_prefix(token);
        if (!v)
            throw CountMismatchError("ESRI grid contains a non-numeric value '" + token + "'");
        values.push_back(*v);
    }

    auto require = [&](const std::string &key) -> double
    {
        const auto it = header.find(key);
        if (it == header.end())
            throw HeaderMissingError("ESRI grid header is missing '" + key + "'");
        return it->second;
    };

    const double ncols_d = require("ncols");
    const double nrows_d = require("nrows");
    const double cell = require("cellsize");
    if (ncols_d < 2 || nrows_d < 2 || ncols_d != std::floor(ncols_d) || nrows_d != std::floor(nrows_d))
        throw HeaderMissingError("ESRI grid needs integer ncols, nrows >= 2");
    const auto ncols = static_cast<std::size_t>(ncols_d);
    const auto nrows = static_cast<std::size_t>(nrows_d);

    double x0 = 0.0, y0 = 0.0;
    if (header.contains("xllcenter"))
        x0 = header.at("xllcenter");
    else
        x0 = require("xllcorner") + 0.5 * cell;
    if (header.contains("yllcenter"))
        y0 = header.at("yllcenter");
    else
        y0 = require("yllcorner") + 0.5 * cell;

    const double nodata = header.contains("nodata_value") ? header.at("nodata_value") : -9999.0;

    if (values.size() != ncols * nrows)
        throw CountMismatchError("ESRI grid holds " + std::to_string(values.size()) + " values, expected " +
                                 std::to_string(ncols * nrows));

    try
    {
        return TerrainGrid(x0, y0, cell, ncols, nrows, std::move(values), nodata);
    }
    catch (const std::invalid_argument &e)
    {
        throw IngestError(std::string("invalid ESRI grid: ") + e.what());
    }
}

} // namespace rissim
