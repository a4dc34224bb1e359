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

#ifndef RISSIM_INGEST_HPP
#define RISSIM_INGEST_HPP

#include "rissim/geometry.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rissim
{

class IngestError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class MalformedXmlError : public IngestError
{
public:
    using IngestError::IngestError;
};

class HeaderMissingError : public IngestError
{
public:
    using IngestError::IngestError;
};

class CountMismatchError : public IngestError
{
public:
    using IngestError::IngestError;
};

// Equirectangular projection about a reference point; x east, y north, meters.
class GeoProjection
{
public:
    static constexpr double kEarthRadius = 6378137.0;

    GeoProjection(double ref_lat_deg, double ref_lon_deg);

    double ref_lat() const { return ref_lat_; }
    double ref_lon() const { return ref_lon_; }

    Point2 project(double lat_deg, double lon_deg) const;
    // Returns (lat, lon) in degrees.
    std::pair<double, double> unproject(Point2 p) const;

private:
    double ref_lat_, ref_lon_;
    double cos_ref_;
};

struct OsmNodeRef
{
    NodeId id = 0;
    double lat = 0.0;
    double lon = 0.0;
};

struct OsmWay
{
    std::int64_t id = 0;
    std::vector<OsmNodeRef> nodes;
};

struct OsmContent
{
    std::vector<Building> buildings; // sorted by id
    std::vector<OsmWay> road_ways;   // sorted by id
    std::size_t warnings = 0;        // ways skipped: dangling refs, open rings, invalid footprints
};

inline constexpr double kDefaultBuildingHeight = 10.0;
inline constexpr double kLevelHeight = 3.0;

// Reads <node>, <way>, <nd> and <tag> elements; relations are ignored.
// Throws MalformedXmlError if the document is not well-formed XML.
OsmContent parse_osm(std::istream &document, const GeoProjection &projection);

// Consecutive node pairs become edges; ways sharing a node id join at that node.
// Node heights come from the terrain when available, else 0.
RoadGraph build_road_graph(const std::vector<OsmWay> &ways, const GeoProjection &projection,
                           const TerrainGrid *terrain = nullptr);

// ESRI ASCII grid. Values are read as nodes at cell centers (xllcorner is shifted by half a cell,
// xllcenter is taken as is). First data row is the northernmost.
TerrainGrid load_dem(std::istream &document);

} // namespace rissim

#endif
