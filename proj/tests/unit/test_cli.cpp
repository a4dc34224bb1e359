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

#include "doctest.h"

#include "rissim/cli.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using rissim::run_cli;

namespace
{

struct Result
{
    int code;
    std::string out, err;
};

Result cli(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name)
{
    const fs::path p = fs::temp_directory_path() / ("rissim-cli-" + std::to_string(::getpid()) + "-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("fixture, validate and run")
{
    const fs::path dir = scratch("run");
    const std::string cfg = (dir / "canyon.json").string();
    REQUIRE(cli({"fixture", "canyon", "-o", cfg}).code == 0);
    const Result v = cli({"validate", "-c", cfg});
    CHECK(v.code == 0);
    CHECK(v.out.find("ok") != std::string::npos);

    const Result r = cli({"run", "-c", cfg, "-o", (dir / "out").string(), "--positions"});
    CHECK(r.code == 0);
    for (const char *f : {"samples.csv", "ecdf.csv", "summary.csv", "manifest.json", "positions.csv"})
        CHECK(fs::exists(dir / "out" / f));
    const std::string summary = slurp(dir / "out" / "summary.csv");
    CHECK(summary.find("none,bs-car,") != std::string::npos);
    CHECK(summary.find("static,bs-car,") != std::string::npos);
    CHECK(summary.find("static_uav,bs-car,") != std::string::npos);
    const std::string manifest = slurp(dir / "out" / "manifest.json");
    CHECK(manifest.find(rissim::sha256_hex(slurp(cfg))) != std::string::npos);

    SUBCASE("replay of the written positions gives the same samples")
    {
        const Result rr = cli({"run", "-c", cfg, "-o", (dir / "replay").string(), "--replay",
                               (dir / "out" / "positions.csv").string()});
        CHECK(rr.code == 0);
        CHECK(slurp(dir / "replay" / "samples.csv") == slurp(dir / "out" / "samples.csv"));
    }
    SUBCASE("compare deployments")
    {
        REQUIRE(cli({"run", "-c", cfg, "-o", (dir / "none").string(), "--deployment", "none"}).code == 0);
        REQUIRE(cli({"run", "-c", cfg, "-o", (dir / "static").string(), "--deployment", "static"}).code == 0);
        const Result same = cli({"compare", "-a", (dir / "none" / "samples.csv").string(), "-b",
                                 (dir / "none" / "samples.csv").string(), "-o", (dir / "cmp0").string()});
        CHECK(same.code == 0);
        CHECK(same.out.find("gain_area_db_s 0.000000") != std::string::npos);

        const Result gain = cli({"compare", "-a", (dir / "none" / "samples.csv").string(), "-b",
                                 (dir / "static" / "samples.csv").string(), "-o", (dir / "cmp").string()});
        CHECK(gain.code == 0);
        const std::string csv = slurp(dir / "cmp" / "gain.csv");
        CHECK(csv.rfind("link_id,gain_area_db_s,outage_fraction_baseline,outage_fraction_enhanced\n", 0) == 0);
        std::istringstream lines(csv);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        CHECK(row.rfind("bs-car,", 0) == 0);
        CHECK(std::stod(row.substr(7)) > 0.0);
    }
}

TEST_CASE("error exits")
{
    const fs::path dir = scratch("errors");
    SUBCASE("missing map file")
    {
        const Result r = cli({"run", "-c", std::string(RISSIM_TEST_DATA) + "/missing_map.json", "-o",
                              (dir / "out").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("ingest error") != std::string::npos);
    }
    SUBCASE("unwritable output directory")
    {
        const std::string cfg = (dir / "canyon.json").string();
        REQUIRE(cli({"fixture", "canyon", "-o", cfg}).code == 0);
        const Result r = cli({"run", "-c", cfg, "-o", (fs::path(cfg) / "sub").string()});
        CHECK(r.code == 3);
    }
    SUBCASE("bad config")
    {
        std::ofstream(dir / "bad.json") << "{\"map\": {}}";
        CHECK(cli({"run", "-c", (dir / "bad.json").string(), "-o", (dir / "o").string()}).code == 2);
        CHECK(cli({"validate", "-c", (dir / "bad.json").string()}).code == 2);
        CHECK(cli({"validate", "-c", (dir / "absent.json").string()}).code == 2);
    }
    SUBCASE("misaligned timestamps")
    {
        std::ofstream(dir / "a.csv") << "t,link_id,condition,selected_kind,selected_panel,path_loss_db,direct_d3d_m\n"
                                        "0.000000,l,LOS,direct_los,,100.000000,10.000000\n"
                                        "0.100000,l,LOS,direct_los,,100.000000,10.000000\n";
        std::ofstream(dir / "b.csv") << "t,link_id,condition,selected_kind,selected_panel,path_loss_db,direct_d3d_m\n"
                                        "0.000000,l,LOS,direct_los,,100.000000,10.000000\n"
                                        "0.200000,l,LOS,direct_los,,100.000000,10.000000\n";
        const Result r = cli({"compare", "-a", (dir / "a.csv").string(), "-b", (dir / "b.csv").string(), "-o",
                              dir.string()});
        CHECK(r.code == 4);
    }
    SUBCASE("usage")
    {
        CHECK(cli({}).code == 1);
        CHECK(cli({"run", "-c", "x.json"}).code == 1);
        CHECK(cli({"frobnicate"}).code == 1);
        CHECK(cli({"--help"}).code == 0);
    }
}

TEST_CASE("config hash")
{
    CHECK(rissim::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(rissim::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
