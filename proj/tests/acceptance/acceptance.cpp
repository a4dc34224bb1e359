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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.

#include "oracles.hpp"
#include "worlds.hpp"

#include "rissim/cli.hpp"
#include "rissim/fixture.hpp"
#include "rissim/ingest.hpp"
#include "rissim/metrics.hpp"
#include "rissim/sim.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace rissim;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Independently evaluated reference values (double precision, outside this code base).
constexpr double kLos100 = 103.3431606268444;
constexpr double kNlos400 = 145.07718376146633;
constexpr double kRis50 = 101.98419728044193;
constexpr double kRis200 = 126.06659693356042;

Outcome closed_forms()
{
    const RadioParams radio;
    const RisPanel panel("p", Vec3(), Vec3(1, 0, 0), 0.5, 0.5);
    const double los = umi_los_pathloss(100, radio);
    const double nlos = umi_nlos_pathloss(400, radio);
    const double ris = ris_pathloss(50, 50, 0, panel, radio);
    const bool ok = std::abs(los - kLos100) <= 0.01 && std::abs(nlos - kNlos400) <= 0.01 && std::abs(ris - kRis50) <= 0.01;
    return {ok, "LOS(100 m) " + fmt("%.4f", los) + ", NLOS(400 m) " + fmt("%.4f", nlos) + ", RIS(50, 50, 0) " +
                    fmt("%.4f", ris) + " dB"};
}

Outcome ris_scaling()
{
    const RadioParams radio;
    const RisPanel panel("p", Vec3(), Vec3(1, 0, 0), 0.5, 0.5);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(50.0, 3000.0), k(1.0, 30.0), theta(0.0, 1.55);
    double worst_scale = 0.0, worst_swap = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        const double d1 = dist(rng), d2 = dist(rng), kk = k(rng), th = theta(rng);
        const double base = ris_pathloss(d1, d2, th, panel, radio);
        worst_scale = std::max(worst_scale,
                               std::abs(ris_pathloss(kk * d1, kk * d2, th, panel, radio) - base - 40.0 * std::log10(kk)));
        worst_swap = std::max(worst_swap, std::abs(ris_pathloss(d2, d1, th, panel, radio) - base));
    }
    return {worst_scale <= 1e-9 && worst_swap <= 1e-12,
            "max scaling error " + fmt("%.3g", worst_scale) + " dB, max swap error " + fmt("%.3g", worst_swap) + " dB"};
}

// Static base station, one car on a straight road, random boxes and static panels.
struct RandomCase
{
    ScenarioConfig config;
    World world;
};

RandomCase random_case(std::mt19937_64 &rng)
{
    const World boxes = testkit::random_box_world(rng, 5);
    std::uniform_real_distribution<double> u(0.0, 200.0);
    RoadGraph roads;
    const double y0 = u(rng);
    const double y1 = u(rng);
    roads.add_node(1, Vec3(0, y0, 0));
    roads.add_node(2, Vec3(200, y1, 0));
    roads.add_edge(1, 2);
    World world(boxes.buildings(), std::nullopt, roads);

    ScenarioConfig c;
    NodeConfig bs;
    bs.id = "bs";
    bs.position = testkit::random_point(rng);
    NodeConfig car;
    car.id = "car";
    car.kind = VehicleKind::ground;
    car.antenna_height = 1.5;
    car.route = {1, 2};
    c.nodes = {bs, car};
    c.links = {{"bs-car", "bs", "car"}};
    c.duration = 30.0;
    c.tick = 0.5;
    std::uniform_int_distribution<int> count(1, 8);
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
    {
        PanelConfig p;
        p.id = "ris" + std::to_string(i);
        p.position = testkit::random_point(rng);
        p.normal = testkit::random_unit(rng);
        c.panels.push_back(p);
    }
    return {c, world};
}

Outcome min_selection_monotonicity()
{
    std::mt19937_64 rng(77);
    int violations = 0, ecdf_violations = 0, ris_selected = 0;
    for (int w = 0; w < 100; ++w)
    {
        RandomCase rc = random_case(rng);
        const Trajectory traj = simulate_mobility(rc.config, rc.world);
        const std::vector<PanelConfig> all = rc.config.panels;

        ScenarioConfig cfg = rc.config;
        cfg.panels.clear();
        SampleLog prev = evaluate_trajectory(cfg, rc.world, traj, Deployment::static_only);
        const SampleLog none = evaluate_trajectory(cfg, rc.world, traj, Deployment::none);
        for (const PanelConfig &p : all)
        {
            cfg.panels.push_back(p);
            const SampleLog next = evaluate_trajectory(cfg, rc.world, traj, Deployment::static_only);
            for (std::size_t i = 0; i < next.size(); ++i)
                if (next[i].path_loss_db > prev[i].path_loss_db)
                    ++violations;
            prev = next;
        }
        for (const auto &s : prev)
            ris_selected += s.selected_kind == PathKind::ris;

        const Ecdf e_none = ecdf(path_losses(none));
        const Ecdf e_static = ecdf(path_losses(prev));
        std::vector<double> grid = e_none.values();
        grid.insert(grid.end(), e_static.values().begin(), e_static.values().end());
        for (double x : grid)
            if (e_static.fraction_at(x) < e_none.fraction_at(x))
                ++ecdf_violations;
    }
    return {violations == 0 && ecdf_violations == 0 && ris_selected > 0,
            std::to_string(violations) + " per-sample increases, " + std::to_string(ecdf_violations) +
                " ECDF dominance violations over 100 worlds (" + std::to_string(ris_selected) +
                " RIS-selected samples)"};
}

Outcome canyon_static()
{
    const auto start = std::chrono::steady_clock::now();
    const ScenarioConfig c = parse_scenario_text(canyon_fixture_json({false, Deployment::static_only, 70.0, 0.1}));
    const World world = load_world(c);
    const Trajectory traj = simulate_mobility(c, world);
    const SampleLog none = evaluate_trajectory(c, world, traj, Deployment::none);
    const SampleLog fixed = evaluate_trajectory(c, world, traj, Deployment::static_only);

    // 35.3 log10 d + 22.4 + 21.3 log10 28 = 142
    const double threshold = std::pow(10.0, (142.0 - 22.4 - 21.3 * std::log10(28.0)) / 35.3);
    SampleLog seg_none, seg_fixed;
    for (std::size_t i = 0; i < none.size(); ++i)
        if (none[i].condition == Condition::nlos && none[i].direct_d3d >= threshold)
        {
            seg_none.push_back(none[i]);
            seg_fixed.push_back(fixed[i]);
        }
    if (seg_none.empty())
        return {false, "no NLOS samples beyond " + fmt("%.2f", threshold) + " m"};

    double worst = 0.0;
    for (const auto &s : seg_fixed)
        worst = std::max(worst, s.path_loss_db);
    const double bound = 126.1 + 6.1;

    // Receiver in the side street where both panel legs are 200 m long.
    const RisPanel corner("ris_corner", c.panels[0].position, c.panels[0].normal);
    const Vec3 bs(0, 0, 10);
    const double y = std::sqrt(200.0 * 200.0 - 4.5 * 4.5) - 9.9;
    const PathSelection at200 = evaluate_link(world, bs, Vec3(200, y, 1.5), std::vector<RisPanel>{corner}, c.radio);
    const bool corner_ok = at200.best().kind == PathKind::ris && std::abs(at200.best().path_loss_db - kRis200) <= 0.1;

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double out_none = outage_fraction(seg_none, 142.0);
    const double out_fixed = outage_fraction(seg_fixed, 142.0);
    const double out_all = outage_fraction(fixed, 142.0);
    const bool ok = out_none > 0.0 && worst <= bound + 0.1 && out_fixed == 0.0 && out_all == 0.0 && corner_ok &&
                    seconds < 5.0;
    return {ok, std::to_string(seg_none.size()) + " samples beyond " + fmt("%.2f", threshold) +
                    " m NLOS: outage without RIS " + fmt("%.3f", out_none) + ", worst with corner RIS " +
                    fmt("%.3f", worst) + " dB (bound " + fmt("%.1f", bound) + "), outage " + fmt("%.3f", out_all) +
                    ", corner sample at d2 = 200 m " + fmt("%.3f", at200.best().path_loss_db) + " dB, " +
                    fmt("%.2f", seconds) + " s"};
}

Outcome canyon_uav()
{
    const ScenarioConfig c = parse_scenario_text(canyon_fixture_json());
    const World world = load_world(c);
    const Trajectory traj = simulate_mobility(c, world);
    const SampleLog fixed = evaluate_trajectory(c, world, traj, Deployment::static_only);
    const SampleLog full = evaluate_trajectory(c, world, traj, Deployment::static_uav);

    std::ifstream golden(std::string(RISSIM_GOLDEN_DIR) + "/canyon_uav.csv");
    if (!golden)
        return {false, "golden file missing"};
    std::string line;
    std::getline(golden, line);
    std::size_t row = 0, golden_mismatch = 0;
    while (std::getline(golden, line))
    {
        std::istringstream fields(line);
        std::string t, cond, a, b;
        std::getline(fields, t, ',');
        std::getline(fields, cond, ',');
        std::getline(fields, a, ',');
        std::getline(fields, b, ',');
        if (row >= fixed.size() || std::abs(std::stod(t) - fixed[row].t) > 1e-6 ||
            cond != to_string(fixed[row].condition) || std::abs(std::stod(a) - fixed[row].path_loss_db) > 1e-6 ||
            std::abs(std::stod(b) - full[row].path_loss_db) > 1e-6)
            ++golden_mismatch;
        ++row;
    }
    if (row != fixed.size())
        golden_mismatch += 1;

    std::size_t worse = 0, nlos = 0, improved = 0;
    for (std::size_t i = 0; i < fixed.size(); ++i)
    {
        if (full[i].path_loss_db > fixed[i].path_loss_db)
            ++worse;
        if (fixed[i].condition == Condition::nlos)
        {
            ++nlos;
            if (full[i].path_loss_db < fixed[i].path_loss_db)
                ++improved;
        }
    }
    const double gain = gain_area(fixed, full);
    const double share = nlos ? static_cast<double>(improved) / static_cast<double>(nlos) : 0.0;
    return {gain > 0.0 && worse == 0 && share >= 0.25 && golden_mismatch == 0,
            "gain area " + fmt("%.2f", gain) + " dB*s, " + std::to_string(worse) + " ticks worse, strict improvement on " +
                std::to_string(improved) + "/" + std::to_string(nlos) + " NLOS ticks (" + fmt("%.1f", 100 * share) +
                "%), " + std::to_string(golden_mismatch) + " golden mismatches"};
}

Outcome brute_force_geometry()
{
    std::mt19937_64 rng(500);
    int los_queries = 0, los_disagree = 0, link_disagree = 0;
    const RadioParams radio;
    std::uniform_int_distribution<int> count(0, 10);
    for (int w = 0; w < 500; ++w)
    {
        const World world = testkit::random_box_world(rng, 5);
        const auto boxes = testkit::to_boxes(world);
        for (int q = 0; q < 10; ++q)
        {
            const Vec3 a = testkit::random_point(rng), b = testkit::random_point(rng);
            ++los_queries;
            if (has_los(world, a, b) != oracle::dense_los(boxes, testkit::to_p3(a), testkit::to_p3(b)))
                ++los_disagree;
        }
        const Vec3 tx = testkit::random_point(rng), rx = testkit::random_point(rng);
        std::vector<RisPanel> panels;
        const int n = count(rng);
        for (int k = 0; k < n; ++k)
        {
            const Vec3 pos = testkit::random_point(rng);
            panels.emplace_back("ris" + std::to_string(k), pos, testkit::random_unit(rng));
        }
        const PathSelection sel = evaluate_link(world, tx, rx, panels, radio);
        const oracle::Choice o = oracle::best_path(boxes, testkit::to_p3(tx), testkit::to_p3(rx),
                                                   testkit::to_panels(panels), testkit::to_radio(radio));
        if (sel.best().panel_id != o.panel || (sel.condition == Condition::los) != o.los ||
            std::abs(sel.best().path_loss_db - o.loss_db) > 1e-9)
            ++link_disagree;
    }
    return {los_disagree == 0 && link_disagree == 0,
            std::to_string(los_disagree) + "/" + std::to_string(los_queries) + " LOS disagreements, " +
                std::to_string(link_disagree) + "/500 path selection disagreements"};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism()
{
    const fs::path dir = fs::temp_directory_path() / ("rissim-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cfg = (dir / "canyon.json").string();
    std::ostringstream out, err;
    int rc = run_cli({"fixture", "canyon", "-o", cfg}, out, err);
    rc |= run_cli({"run", "-c", cfg, "-o", (dir / "a").string()}, out, err);
    rc |= run_cli({"run", "-c", cfg, "-o", (dir / "b").string()}, out, err);
    const std::string a = slurp(dir / "a" / "samples.csv");
    const std::string b = slurp(dir / "b" / "samples.csv");
    fs::remove_all(dir);
    return {rc == 0 && !a.empty() && a == b,
            "exit " + std::to_string(rc) + ", samples.csv " + std::to_string(a.size()) + " bytes, " +
                (a == b ? "identical" : "different")};
}

Outcome ingest_round_trip()
{
    const std::string dir = RISSIM_TEST_DATA;
    std::ifstream osm_in(dir + "/campus.osm");
    const GeoProjection proj(48.0, 11.0);
    const OsmContent osm = parse_osm(osm_in, proj);
    const RoadGraph roads = build_road_graph(osm.road_ways, proj);
    const bool osm_ok = osm.buildings.size() == 2 && osm.buildings[0].height == 12.0 &&
                        osm.buildings[1].height == 6.0 && roads.nodes().size() == 3 && roads.edges().size() == 2;

    std::ifstream dem_in(dir + "/dem_2x2.asc");
    const TerrainGrid g = load_dem(dem_in);
    const bool dem_ok = terrain_height_at(g, 0, 10) == 1.0 && terrain_height_at(g, 10, 10) == 2.0 &&
                        terrain_height_at(g, 0, 0) == 3.0 && terrain_height_at(g, 10, 0) == 4.0 &&
                        terrain_height_at(g, 5, 5) == 2.5;
    return {osm_ok && dem_ok, std::to_string(osm.buildings.size()) + " buildings, " +
                                  std::to_string(roads.nodes().size()) + " road nodes / " +
                                  std::to_string(roads.edges().size()) + " edges, DEM center " +
                                  fmt("%.3f", terrain_height_at(g, 5, 5))};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"closed-form path loss values", closed_forms},
        {"RIS scaling and reciprocity", ris_scaling},
        {"min-selection monotonicity and ECDF dominance", min_selection_monotonicity},
        {"canyon fixture, corner RIS removes the far NLOS outage", canyon_static},
        {"canyon fixture, UAV-mounted RIS improves on static", canyon_uav},
        {"brute-force LOS and path selection equivalence", brute_force_geometry},
        {"byte-identical repeated runs", determinism},
        {"OSM and DEM ingest round trip", ingest_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o{false, ""};
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
