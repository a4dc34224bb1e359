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

#include "rissim/scenario.hpp"
#include "rissim/ingest.hpp"

#include "json.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace rissim
{

using nlohmann::json;

namespace
{

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Tracks which keys of a JSON object were consumed so leftovers can be rejected.
class ObjectReader
{
public:
    ObjectReader(const json &j, std::string where)
        : j_(j), where_(std::move(where))
    {
        if (!j_.is_object())
            throw ConfigError(where_ + " must be a JSON object");
    }

    bool has(const std::string &key) const { return j_.contains(key); }

    const json &raw(const std::string &key)
    {
        if (!j_.contains(key))
            throw ConfigError(where_ + ": missing required key '" + key + "'");
        used_.insert(key);
        return j_.at(key);
    }

    double number(const std::string &key)
    {
        const json &v = raw(key);
        if (!v.is_number())
            throw ConfigError(where_ + "." + key + " must be a number");
        return v.get<double>();
    }
    double number(const std::string &key, double fallback) { return has(key) ? number(key) : fallback; }

    std::int64_t integer(const std::string &key)
    {
        const json &v = raw(key);
        if (!v.is_number_integer())
            throw ConfigError(where_ + "." + key + " must be an integer");
        return v.get<std::int64_t>();
    }

    std::string string(const std::string &key)
    {
        const json &v = raw(key);
        if (!v.is_string())
            throw ConfigError(where_ + "." + key + " must be a string");
        return v.get<std::string>();
    }

    bool boolean(const std::string &key, bool fallback)
    {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_boolean())
            throw ConfigError(where_ + "." + key + " must be a boolean");
        return v.get<bool>();
    }

    const json &array(const std::string &key)
    {
        const json &v = raw(key);
        if (!v.is_array())
            throw ConfigError(where_ + "." + key + " must be an array");
        return v;
    }

    void finish() const
    {
        for (const auto &[k, _] : j_.items())
            if (!used_.contains(k))
                throw ConfigError(where_ + ": unknown key '" + k + "'");
    }

    const std::string &where() const { return where_; }

private:
    const json &j_;
    std::string where_;
    std::set<std::string> used_;
};

std::vector<double> numbers(const json &v, std::size_t min_n, std::size_t max_n, const std::string &where)
{
    if (!v.is_array() || v.size() < min_n || v.size() > max_n)
        throw ConfigError(where + " must be an array of " + std::to_string(min_n) +
                          (min_n == max_n ? "" : "-" + std::to_string(max_n)) + " numbers");
    std::vector<double> out;
    for (const auto &e : v)
    {
        if (!e.is_number())
            throw ConfigError(where + " must contain numbers only");
        out.push_back(e.get<double>());
    }
    return out;
}

Vec3 vec3(const json &v, const std::string &where)
{
    const auto n = numbers(v, 3, 3, where);
    try
    {
        return Vec3(n[0], n[1], n[2]);
    }
    catch (const std::domain_error &)
    {
        throw ConfigError(where + " must be finite");
    }
}

void check_id(const std::string &id, const std::string &where)
{
    if (id.empty() || id.find_first_of(",\"\n\r") != std::string::npos)
        throw ConfigError(where + ": id must be non-empty and free of commas, quotes and line breaks");
}

InlineMap parse_inline_map(ObjectReader &map)
{
    InlineMap out;
    if (map.has("buildings"))
    {
        const json &arr = map.array("buildings");
        for (std::size_t i = 0; i < arr.size(); ++i)
        {
            ObjectReader b(arr[i], "map.buildings[" + std::to_string(i) + "]");
            const auto id = b.integer("id");
            const json &fp = b.array("footprint");
            std::vector<Point2> ring;
            for (std::size_t k = 0; k < fp.size(); ++k)
            {
                const auto xy = numbers(fp[k], 2, 2, b.where() + ".footprint[" + std::to_string(k) + "]");
                ring.push_back({xy[0], xy[1]});
            }
            const double height = b.number("height_m");
            b.finish();
            try
            {
                out.buildings.emplace_back(id, Polygon2D(std::move(ring)), 0.0, height);
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(b.where() + ": " + e.what());
            }
        }
    }
    if (map.has("roads"))
    {
        ObjectReader roads(map.raw("roads"), "map.roads");
        const json &nodes = roads.array("nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i)
        {
            ObjectReader n(nodes[i], "map.roads.nodes[" + std::to_string(i) + "]");
            const auto id = n.integer("id");
            const auto xy = numbers(n.raw("position"), 2, 2, n.where() + ".position");
            n.finish();
            if (!out.road_nodes.emplace(id, Point2{xy[0], xy[1]}).second)
                throw ConfigError(n.where() + ": duplicate road node id " + std::to_string(id));
        }
        const json &ways = roads.array("ways");
        for (std::size_t i = 0; i < ways.size(); ++i)
        {
            const std::string where = "map.roads.ways[" + std::to_string(i) + "]";
            if (!ways[i].is_array() || ways[i].size() < 2)
                throw ConfigError(where + " must list at least two node ids");
            std::vector<NodeId> way;
            for (const auto &e : ways[i])
            {
                if (!e.is_number_integer())
                    throw ConfigError(where + " must contain integer node ids");
                const auto id = e.get<NodeId>();
                if (!out.road_nodes.contains(id))
                    throw ConfigError(where + " references unknown road node " + std::to_string(id));
                way.push_back(id);
            }
            out.road_ways.push_back(std::move(way));
        }
        roads.finish();
    }
    return out;
}

NodeConfig parse_node(const json &j, std::size_t index, const RadioParams &radio)
{
    ObjectReader r(j, "nodes[" + std::to_string(index) + "]");
    NodeConfig n;
    n.id = r.string("id");
    check_id(n.id, r.where());
    const std::string kind = r.string("kind");

    if (kind == "static")
    {
        n.kind = VehicleKind::fixed;
        n.position = vec3(r.raw("position"), r.where() + ".position");
        n.antenna_height = r.number("antenna_height_m", 0.0);
    }
    else if (kind == "ground")
    {
        n.kind = VehicleKind::ground;
        n.antenna_height = r.number("antenna_height_m", radio.h_ut);
        const json &route = r.raw("route");
        if (route.is_array())
        {
            for (const auto &e : route)
            {
                if (!e.is_number_integer())
                    throw ConfigError(r.where() + ".route must contain integer road node ids");
                n.route.push_back(e.get<NodeId>());
            }
            if (n.route.empty())
                throw ConfigError(r.where() + ".route must not be empty");
        }
        else
        {
            ObjectReader rb(route, r.where() + ".route");
            n.route_between = std::pair{rb.integer("from"), rb.integer("to")};
            rb.finish();
        }
        n.loop = r.boolean("loop", false);
        n.start_offset = r.number("start_offset_m", 0.0);
        n.initial_speed = r.number("initial_speed_mps", 0.0);
        if (n.start_offset < 0.0 || n.initial_speed < 0.0)
            throw ConfigError(r.where() + ": start offset and initial speed must be non-negative");
        if (r.has("motion"))
        {
            ObjectReader m(r.raw("motion"), r.where() + ".motion");
            n.motion.v_max = m.number("v_max_mps", n.motion.v_max);
            n.motion.a_max = m.number("a_max_mps2", n.motion.a_max);
            n.motion.b_max = m.number("b_max_mps2", n.motion.b_max);
            n.motion.corner_speed = m.number("corner_speed_mps", n.motion.corner_speed);
            m.finish();
        }
        try
        {
            n.motion.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(r.where() + ": " + e.what());
        }
    }
    else if (kind == "uav")
    {
        n.kind = VehicleKind::uav;
        n.antenna_height = r.number("antenna_height_m", 0.0);
        n.target = r.string("target");
        n.align_to = r.string("align_to");
        n.follower.altitude = r.number("altitude_m", n.follower.altitude);
        if (r.has("offset"))
        {
            const auto xy = numbers(r.raw("offset"), 2, 2, r.where() + ".offset");
            n.follower.horizontal_offset = Vec3(xy[0], xy[1], 0.0);
        }
        if (!(n.follower.altitude > 0.0))
            throw ConfigError(r.where() + ": altitude_m must be positive");
    }
    else
    {
        throw ConfigError(r.where() + ".kind must be one of static, ground, uav");
    }
    r.finish();
    return n;
}

PanelConfig parse_panel(const json &j, std::size_t index)
{
    ObjectReader r(j, "panels[" + std::to_string(index) + "]");
    PanelConfig p;
    p.id = r.string("id");
    check_id(p.id, r.where());
    p.width = r.number("width_m", p.width);
    p.height = r.number("height_m", p.height);
    if (!(p.width > 0.0) || !(p.height > 0.0))
        throw ConfigError(r.where() + ": panel dimensions must be positive");

    const std::string kind = r.string("kind");
    if (kind == "static")
    {
        p.position = vec3(r.raw("position"), r.where() + ".position");
        if (r.has("normal") == r.has("aim_at"))
            throw ConfigError(r.where() + ": static panels need exactly one of 'normal' or 'aim_at'");
        const Vec3 dir = r.has("normal") ? vec3(r.raw("normal"), r.where() + ".normal")
                                         : vec3(r.raw("aim_at"), r.where() + ".aim_at") - p.position;
        if (dir.norm() == 0.0)
            throw ConfigError(r.where() + ": panel orientation is degenerate");
        p.normal = dir.normalized();
    }
    else if (kind == "mounted")
    {
        p.mounted = true;
        p.mount.carrier = r.string("carrier");
        p.mount.downtilt = r.number("downtilt_deg", 30.0) * kDegToRad;
        if (r.has("offset"))
            p.mount.offset = vec3(r.raw("offset"), r.where() + ".offset");
        if (r.has("align_to"))
            p.align_to = r.string("align_to");
        try
        {
            p.mount.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(r.where() + ": " + e.what());
        }
    }
    else
    {
        throw ConfigError(r.where() + ".kind must be one of static, mounted");
    }
    r.finish();
    return p;
}

ScenarioConfig parse_scenario_json(const json &doc, const std::filesystem::path &base_dir)
{
    ObjectReader top(doc, "config");
    ScenarioConfig cfg;

    {
        ObjectReader map(top.raw("map"), "map");
        if (map.has("osm"))
        {
            cfg.map.osm = base_dir / map.string("osm");
            ObjectReader ref(map.raw("reference"), "map.reference");
            const double lat = ref.number("lat"), lon = ref.number("lon");
            ref.finish();
            try
            {
                cfg.map.projection.emplace(lat, lon);
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(std::string("map.reference: ") + e.what());
            }
        }
        cfg.map.inline_map = parse_inline_map(map);
        map.finish();
    }

    if (top.has("dem"))
        cfg.dem = base_dir / top.string("dem");

    if (top.has("radio"))
    {
        ObjectReader r(top.raw("radio"), "radio");
        cfg.radio.fc_ghz = r.number("fc_ghz", cfg.radio.fc_ghz);
        cfg.radio.gain_tx = r.number("gain_tx", cfg.radio.gain_tx);
        cfg.radio.gain_rx = r.number("gain_rx", cfg.radio.gain_rx);
        cfg.radio.h_bs = r.number("h_bs_m", cfg.radio.h_bs);
        cfg.radio.h_ut = r.number("h_ut_m", cfg.radio.h_ut);
        cfg.radio.link_budget_db = r.number("link_budget_db", cfg.radio.link_budget_db);
        r.finish();
        try
        {
            cfg.radio.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("radio: ") + e.what());
        }
    }

    const json &nodes = top.array("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        cfg.nodes.push_back(parse_node(nodes[i], i, cfg.radio));

    if (top.has("panels"))
    {
        const json &panels = top.array("panels");
        for (std::size_t i = 0; i < panels.size(); ++i)
            cfg.panels.push_back(parse_panel(panels[i], i));
    }

    const json &links = top.array("links");
    for (std::size_t i = 0; i < links.size(); ++i)
    {
        ObjectReader l(links[i], "links[" + std::to_string(i) + "]");
        LinkConfig link{l.string("id"), l.string("tx"), l.string("rx")};
        check_id(link.id, l.where());
        l.finish();
        cfg.links.push_back(std::move(link));
    }

    cfg.duration = top.number("duration_s");
    cfg.tick = top.number("tick_s", cfg.tick);
    if (top.has("deployment"))
        cfg.deployment = deployment_from_string(top.string("deployment"));
    top.finish();

    validate_scenario(cfg);
    return cfg;
}

} // namespace

const char *to_string(Deployment d)
{
    switch (d)
    {
    case Deployment::none:
        return "none";
    case Deployment::static_only:
        return "static";
    case Deployment::static_uav:
        return "static_uav";
    }
    return "unknown";
}

Deployment deployment_from_string(const std::string &s)
{
    if (s == "none")
        return Deployment::none;
    if (s == "static")
        return Deployment::static_only;
    if (s == "static_uav")
        return Deployment::static_uav;
    throw ConfigError("deployment must be one of none, static, static_uav (got '" + s + "')");
}

const NodeConfig &ScenarioConfig::node(const std::string &id) const
{
    for (const auto &n : nodes)
        if (n.id == id)
            return n;
    throw ConfigError("unknown node '" + id + "'");
}

void validate_scenario(const ScenarioConfig &config)
{
    if (!(config.tick > 0.0) || !std::isfinite(config.tick))
        throw ConfigError("tick_s must be positive");
    if (!(config.duration >= 0.0) || !std::isfinite(config.duration))
        throw ConfigError("duration_s must be non-negative");
    if (config.links.empty())
        throw ConfigError("at least one link is required");

    std::map<std::string, std::size_t> order;
    for (std::size_t i = 0; i < config.nodes.size(); ++i)
        if (!order.emplace(config.nodes[i].id, i).second)
            throw ConfigError("duplicate node id '" + config.nodes[i].id + "'");

    auto require_node = [&](const std::string &id, const std::string &where)
    {
        if (!order.contains(id))
            throw ConfigError(where + " references unknown node '" + id + "'");
        return order.at(id);
    };

    for (std::size_t i = 0; i < config.nodes.size(); ++i)
    {
        const auto &n = config.nodes[i];
        if (n.kind != VehicleKind::uav)
            continue;
        const std::size_t t = require_node(n.target, "node '" + n.id + "' target");
        require_node(n.align_to, "node '" + n.id + "' align_to");
        if (t == i)
            throw ConfigError("node '" + n.id + "' cannot follow itself");
        if (config.nodes[t].kind == VehicleKind::uav && t > i)
            throw ConfigError("node '" + n.id + "' follows a UAV declared after it");
    }

    std::set<std::string> panel_ids;
    for (const auto &p : config.panels)
    {
        if (!panel_ids.insert(p.id).second)
            throw ConfigError("duplicate panel id '" + p.id + "'");
        if (p.mounted)
        {
            require_node(p.mount.carrier, "panel '" + p.id + "' carrier");
            if (p.align_to)
                require_node(*p.align_to, "panel '" + p.id + "' align_to");
        }
    }

    std::set<std::string> link_ids;
    for (const auto &l : config.links)
    {
        if (!link_ids.insert(l.id).second)
            throw ConfigError("duplicate link id '" + l.id + "'");
        require_node(l.tx, "link '" + l.id + "' tx");
        require_node(l.rx, "link '" + l.id + "' rx");
        if (l.tx == l.rx)
            throw ConfigError("link '" + l.id + "' needs distinct endpoints");
    }

    if (config.map.osm && !config.map.projection)
        throw ConfigError("map.osm requires map.reference");
}

ScenarioConfig parse_scenario_text(const std::string &text, const std::filesystem::path &base_dir)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_scenario_json(doc, base_dir);
}

ScenarioConfig load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path.parent_path());
}

World load_world(const ScenarioConfig &config)
{
    std::optional<TerrainGrid> terrain;
    if (config.dem)
    {
        std::ifstream in(*config.dem);
        if (!in)
            throw IngestError("cannot open DEM file " + config.dem->string());
        terrain = load_dem(in);
    }
    const TerrainGrid *grid = terrain ? &*terrain : nullptr;

    std::vector<Building> buildings;
    RoadGraph roads;
    if (config.map.osm)
    {
        std::ifstream in(*config.map.osm);
        if (!in)
            throw IngestError("cannot open map file " + config.map.osm->string());
        OsmContent osm = parse_osm(in, *config.map.projection);
        buildings = std::move(osm.buildings);
        roads = build_road_graph(osm.road_ways, *config.map.projection, grid);
    }

    const InlineMap &im = config.map.inline_map;
    buildings.insert(buildings.end(), im.buildings.begin(), im.buildings.end());
    for (const auto &[id, p] : im.road_nodes)
    {
        double z = 0.0;
        if (grid)
        {
            try
            {
                z = terrain_height_at(*grid, p.x, p.y);
            }
            catch (const TerrainError &)
            {
                z = 0.0;
            }
        }
        if (roads.has_node(id))
            throw IngestError("road node " + std::to_string(id) + " defined twice");
        roads.add_node(id, Vec3(p.x, p.y, z));
    }
    for (const auto &way : im.road_ways)
        for (std::size_t i = 0; i + 1 < way.size(); ++i)
            roads.add_edge(way[i], way[i + 1]);

    try
    {
        return World(std::move(buildings), std::move(terrain), std::move(roads));
    }
    catch (const std::invalid_argument &e)
    {
        throw IngestError(e.what());
    }
}

} // namespace rissim
