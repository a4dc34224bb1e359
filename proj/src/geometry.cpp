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

#include "rissim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace rissim
{

namespace
{

constexpr double kEdgeEps = 1e-9;

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
Point2 sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

// Closed segment-segment intersection test (touching counts).
bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d)
{
    auto orient = [](Point2 p, Point2 q, Point2 r)
    {
        const double v = cross(sub(q, p), sub(r, p));
        return (v > kEdgeEps) - (v < -kEdgeEps);
    };
    auto on_segment = [](Point2 p, Point2 q, Point2 r) // r on [p, q], given collinear
    {
        return std::min(p.x, q.x) - kEdgeEps <= r.x && r.x <= std::max(p.x, q.x) + kEdgeEps &&
               std::min(p.y, q.y) - kEdgeEps <= r.y && r.y <= std::max(p.y, q.y) + kEdgeEps;
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool point_on_segment(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = sub(b, a);
    const double len = std::hypot(ab.x, ab.y);
    if (std::abs(cross(ab, sub(p, a))) > kEdgeEps * std::max(1.0, len))
        return false;
    return std::min(a.x, b.x) - kEdgeEps <= p.x && p.x <= std::max(a.x, b.x) + kEdgeEps &&
           std::min(a.y, b.y) - kEdgeEps <= p.y && p.y <= std::max(a.y, b.y) + kEdgeEps;
}

} // namespace

// ---------- Polygon2D ----------

Polygon2D::Polygon2D(std::vector<Point2> vertices)
{
    for (const auto &v : vertices)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw std::invalid_argument("Polygon vertices must be finite.");

    std::vector<Point2> ring;
    ring.reserve(vertices.size());
    for (const auto &v : vertices)
        if (ring.empty() || !(ring.back() == v))
            ring.push_back(v);
    while (ring.size() > 1 && ring.front() == ring.back())
        ring.pop_back();

    if (ring.size() < 3)
        throw std::invalid_argument("Polygon needs at least 3 distinct vertices.");

    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point2 a = ring[i], b = ring[(i + 1) % n];
        // Adjacent edges may only share their common vertex.
        const Point2 c = ring[(i + 2) % n];
        if (point_on_segment(c, a, b) || point_on_segment(a, b, c))
            throw std::invalid_argument("Polygon has a degenerate spike.");
        for (std::size_t j = i + 2; j < n; ++j)
        {
            if (i == 0 && j == n - 1)
                continue;
            if (segments_touch(a, b, ring[j], ring[(j + 1) % n]))
                throw std::invalid_argument("Polygon is self-intersecting.");
        }
    }

    vertices_ = std::move(ring);
    if (signed_area() < 0.0)
        std::reverse(vertices_.begin(), vertices_.end());

    min_x_ = max_x_ = vertices_[0].x;
    min_y_ = max_y_ = vertices_[0].y;
    for (const auto &v : vertices_)
    {
        min_x_ = std::min(min_x_, v.x);
        max_x_ = std::max(max_x_, v.x);
        min_y_ = std::min(min_y_, v.y);
        max_y_ = std::max(max_y_, v.y);
    }
}

double Polygon2D::signed_area() const
{
    double a = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        a += cross(vertices_[i], vertices_[(i + 1) % n]);
    return 0.5 * a;
}

Point2 Polygon2D::centroid() const
{
    double cx = 0.0, cy = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
        const double w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    const double area6 = 6.0 * signed_area();
    return {cx / area6, cy / area6};
}

bool Polygon2D::contains_strict(Point2 p) const
{
    if (p.x <= min_x_ || p.x >= max_x_ || p.y <= min_y_ || p.y >= max_y_)
        return false;
    const std::size_t n = vertices_.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
    {
        const Point2 a = vertices_[i], b = vertices_[j];
        if (point_on_segment(p, a, b))
            return false;
        if ((a.y > p.y) != (b.y > p.y))
        {
            const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_cross)
                inside = !inside;
        }
    }
    return inside;
}

// ---------- Building ----------

Building::Building(std::int64_t id_, Polygon2D footprint_, double base_z_, double height_)
    : id(id_), footprint(std::move(footprint_)), base_z(base_z_), height(height_)
{
    if (!(height > 0.0) || !std::isfinite(height))
        throw std::invalid_argument("Building height must be positive.");
    if (!std::isfinite(base_z))
        throw std::invalid_argument("Building base must be finite.");
}

// ---------- TerrainGrid ----------

TerrainGrid::TerrainGrid(double x0, double y0, double cell_size, std::size_t ncols, std::size_t nrows,
                         std::vector<double> heights, double nodata)
    : x0_(x0), y0_(y0), cell_size_(cell_size), ncols_(ncols), nrows_(nrows), heights_(std::move(heights)),
      nodata_(nodata)
{
    if (!(cell_size > 0.0) || !std::isfinite(cell_size))
        throw std::invalid_argument("Terrain cell size must be positive.");
    if (ncols < 2 || nrows < 2)
        throw std::invalid_argument("Terrain grid needs at least 2 x 2 nodes.");
    if (heights_.size() != ncols * nrows)
        throw std::invalid_argument("Terrain height count does not match grid dimensions.");
    if (!std::isfinite(x0) || !std::isfinite(y0))
        throw std::invalid_argument("Terrain origin must be finite.");
}

bool TerrainGrid::contains(double x, double y) const
{
    return x >= x0_ && x <= max_x() && y >= y0_ && y <= max_y();
}

// ---------- World ----------

World::World(std::vector<Building> buildings, std::optional<TerrainGrid> terrain, RoadGraph roads)
    : buildings_(std::move(buildings)), terrain_(std::move(terrain)), roads_(std::move(roads))
{
    std::set<std::int64_t> ids;
    for (const auto &b : buildings_)
        if (!ids.insert(b.id).second)
            throw std::invalid_argument("Duplicate building id " + std::to_string(b.id) + ".");

    if (terrain_)
    {
        for (auto &b : buildings_)
        {
            const Point2 c = b.footprint.centroid();
            try
            {
                b.base_z = terrain_height_at(*terrain_, c.x, c.y);
            }
            catch (const TerrainError &)
            {
                b.base_z = 0.0;
            }
        }
    }
}

World World::with_building(Building b) const
{
    std::vector<Building> all = buildings_;
    all.push_back(std::move(b));
    return World(std::move(all), terrain_, roads_);
}

// ---------- Operations ----------

double distance3d(const Vec3 &p, const Vec3 &q) { return (q - p).norm(); }

double terrain_height_at(const TerrainGrid &grid, double x, double y)
{
    if (!grid.contains(x, y))
        throw OutOfBoundsError("Terrain query outside grid extent.");

    const double fx = (x - grid.x0()) / grid.cell_size();
    const double fy = (y - grid.y0()) / grid.cell_size();
    const std::size_t col = std::min(static_cast<std::size_t>(std::floor(fx)), grid.ncols() - 2);
    const std::size_t south = std::min(static_cast<std::size_t>(std::floor(fy)), grid.nrows() - 2);
    const double tx = fx - static_cast<double>(col);
    const double ty = fy - static_cast<double>(south);

    // Rows are stored north first.
    const std::size_t row_s = grid.nrows() - 1 - south;
    const std::size_t row_n = row_s - 1;
    const double h00 = grid.at(col, row_s), h10 = grid.at(col + 1, row_s);
    const double h01 = grid.at(col, row_n), h11 = grid.at(col + 1, row_n);
    for (double h : {h00, h10, h01, h11})
        if (h == grid.nodata())
            throw NoDataError("Terrain query touches a nodata cell.");

    return (1.0 - tx) * (1.0 - ty) * h00 + tx * (1.0 - ty) * h10 + (1.0 - tx) * ty * h01 + tx * ty * h11;
}

bool segment_intersects_building(const Vec3 &p, const Vec3 &q, const Building &b)
{
    const Polygon2D &fp = b.footprint;
    const double base = b.base_z, top = b.top();

    if (std::max(p.x(), q.x()) <= fp.min_x() || std::min(p.x(), q.x()) >= fp.max_x() ||
        std::max(p.y(), q.y()) <= fp.min_y() || std::min(p.y(), q.y()) >= fp.max_y() ||
        std::max(p.z(), q.z()) <= base || std::min(p.z(), q.z()) >= top)
        return false;

    // z-range of the open sub-segment (ta, tb) overlaps the open interval (base, top).
    auto z_overlaps = [&](double ta, double tb)
    {
        const double za = p.z() + ta * (q.z() - p.z());
        const double zb = p.z() + tb * (q.z() - p.z());
        const double lo = std::min(za, zb), hi = std::max(za, zb);
        if (hi - lo <= 0.0)
            return base < lo && lo < top;
        return std::max(lo, base) < std::min(hi, top);
    };

    const Point2 p2{p.x(), p.y()};
    const Point2 d{q.x() - p.x(), q.y() - p.y()};
    const double len2 = d.x * d.x + d.y * d.y;

    if (len2 < 1e-24)
        return fp.contains_strict(p2) && z_overlaps(0.0, 1.0);

    // Split the 2D segment at every footprint edge crossing; each piece is wholly inside or outside.
    std::vector<double> ts{0.0, 1.0};
    const auto &v = fp.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point2 a = v[i];
        const Point2 e = sub(v[(i + 1) % n], a);
        const Point2 ap = sub(a, p2);
        const double denom = cross(d, e);
        if (std::abs(denom) > 1e-15 * std::sqrt(len2) * std::hypot(e.x, e.y))
        {
            const double t = cross(ap, e) / denom;
            const double u = cross(ap, d) / denom;
            if (u >= -1e-12 && u <= 1.0 + 1e-12 && t > 0.0 && t < 1.0)
                ts.push_back(t);
        }
        else
        {
            // Parallel edge: its endpoints bound the overlap, if any.
            for (const Point2 &w : {a, v[(i + 1) % n]})
            {
                const double t = ((w.x - p2.x) * d.x + (w.y - p2.y) * d.y) / len2;
                if (t > 0.0 && t < 1.0)
                    ts.push_back(t);
            }
        }
    }
    std::sort(ts.begin(), ts.end());

    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    {
        const double ta = ts[i], tb = ts[i + 1];
        if (tb - ta <= 1e-15)
            continue;
        const double tm = 0.5 * (ta + tb);
        if (fp.contains_strict({p2.x + tm * d.x, p2.y + tm * d.y}) && z_overlaps(ta, tb))
            return true;
    }
    return false;
}

bool segment_clears_terrain(const TerrainGrid &grid, const Vec3 &p, const Vec3 &q)
{
    const double length = distance3d(p, q);
    const auto steps = static_cast<std::size_t>(std::floor(length / kTerrainLosStep));
    for (std::size_t k = 1; k <= steps; ++k)
    {
        const double t = static_cast<double>(k) * kTerrainLosStep / length;
        if (t >= 1.0)
            break;
        const Vec3 s = lerp(p, q, t);
        if (!grid.contains(s.x(), s.y()))
            continue;
        double ground = 0.0;
        try
        {
            ground = terrain_height_at(grid, s.x(), s.y());
        }
        catch (const NoDataError &)
        {
            continue;
        }
        if (ground > s.z() + kTerrainLosTolerance)
            return false;
    }
    return true;
}

bool has_los(const World &world, const Vec3 &p, const Vec3 &q)
{
    // Canonical endpoint order keeps the answer bit-identical under swapping.
    const bool swap = std::make_tuple(q.x(), q.y(), q.z()) < std::make_tuple(p.x(), p.y(), p.z());
    const Vec3 &a = swap ? q : p;
    const Vec3 &b = swap ? p : q;

    for (const auto &building : world.buildings())
        if (segment_intersects_building(a, b, building))
            return false;
    if (world.terrain() && !segment_clears_terrain(*world.terrain(), a, b))
        return false;
    return true;
}

} // namespace rissim
