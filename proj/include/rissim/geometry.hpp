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

#ifndef RISSIM_GEOMETRY_HPP
#define RISSIM_GEOMETRY_HPP

#include "rissim/road_graph.hpp"
#include "rissim/vec3.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rissim
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point2 &) const = default;
};

// Simple polygon in the xy plane. The constructor drops a repeated closing vertex,
// rejects degenerate or self-intersecting rings and stores the vertices counter-clockwise.
class Polygon2D
{
public:
    explicit Polygon2D(std::vector<Point2> vertices);

    const std::vector<Point2> &vertices() const { return vertices_; }
    double signed_area() const;
    Point2 centroid() const;

    // Strict interior test; points on an edge are outside.
    bool contains_strict(Point2 p) const;

    double min_x() const { return min_x_; }
    double max_x() const { return max_x_; }
    double min_y() const { return min_y_; }
    double max_y() const { return max_y_; }

private:
    std::vector<Point2> vertices_;
    double min_x_ = 0.0, max_x_ = 0.0, min_y_ = 0.0, max_y_ = 0.0;
};

// Vertical prism footprint x [base_z, base_z + height].
struct Building
{
    std::int64_t id = 0;
    Polygon2D footprint;
    double base_z = 0.0;
    double height = 0.0;

    Building(std::int64_t id_, Polygon2D footprint_, double base_z_, double height_);

    double top() const { return base_z + height; }
};

class TerrainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class OutOfBoundsError : public TerrainError
{
public:
    using TerrainError::TerrainError;
};

class NoDataError : public TerrainError
{
public:
    using TerrainError::TerrainError;
};

// Node-registered height raster. Row 0 is the northernmost row; node (col, row) sits at
// (x0 + col * cell_size, y0 + (nrows - 1 - row) * cell_size), where (x0, y0) is the
// south-west node.
class TerrainGrid
{
public:
    TerrainGrid(double x0, double y0, double cell_size, std::size_t ncols, std::size_t nrows,
                std::vector<double> heights, double nodata);

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double cell_size() const { return cell_size_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nrows() const { return nrows_; }
    double nodata() const { return nodata_; }
    double max_x() const { return x0_ + static_cast<double>(ncols_ - 1) * cell_size_; }
    double max_y() const { return y0_ + static_cast<double>(nrows_ - 1) * cell_size_; }

    // Raw value at (col, row), row 0 = north.
    double at(std::size_t col, std::size_t row) const { return heights_[row * ncols_ + col]; }
    bool contains(double x, double y) const;

private:
    double x0_, y0_, cell_size_;
    std::size_t ncols_, nrows_;
    std::vector<double> heights_;
    double nodata_;
};

// Obstacle set plus road network. Immutable after construction.
class World
{
public:
    World() = default;

    // Buildings are attached to the terrain: base_z is replaced by the terrain height at the
    // footprint centroid when terrain is present (0 when the centroid is off-grid).
    World(std::vector<Building> buildings, std::optional<TerrainGrid> terrain, RoadGraph roads);

    const std::vector<Building> &buildings() const { return buildings_; }
    const std::optional<TerrainGrid> &terrain() const { return terrain_; }
    const RoadGraph &roads() const { return roads_; }

    // Copy of this world with one more building.
    World with_building(Building b) const;

private:
    std::vector<Building> buildings_;
    std::optional<TerrainGrid> terrain_;
    RoadGraph roads_;
};

// Sampling step along a segment for terrain clearance, meters.
inline constexpr double kTerrainLosStep = 5.0;
// A segment within this distance of the terrain surface still counts as clear, meters.
inline constexpr double kTerrainLosTolerance = 1e-6;

double distance3d(const Vec3 &p, const Vec3 &q);

// Bilinear interpolation between the four enclosing nodes.
// Throws OutOfBoundsError outside the grid extent and NoDataError if a contributing node is nodata.
double terrain_height_at(const TerrainGrid &grid, double x, double y);

// True iff the open segment (p, q) enters the interior of the building prism.
bool segment_intersects_building(const Vec3 &p, const Vec3 &q, const Building &b);

// True iff the terrain surface stays at or below the segment at every sample point.
bool segment_clears_terrain(const TerrainGrid &grid, const Vec3 &p, const Vec3 &q);

bool has_los(const World &world, const Vec3 &p, const Vec3 &q);

} // namespace rissim

#endif
