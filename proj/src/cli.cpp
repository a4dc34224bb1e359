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

#include "rissim/cli.hpp"

#include "rissim/fixture.hpp"
#include "rissim/ingest.hpp"
#include "rissim/metrics.hpp"
#include "rissim/sim.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef RISSIM_VERSION
#define RISSIM_VERSION "0.0.0"
#endif

namespace rissim
{

namespace fs = std::filesystem;

namespace
{

struct OutputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void ensure_writable_dir(const fs::path &dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw OutputError("cannot create output directory " + dir.string());
    const fs::path probe = dir / ".rissim-write-probe";
    {
        std::ofstream f(probe);
        if (!f)
            throw OutputError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

template <class Writer> void write_file(const fs::path &path, Writer &&writer)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw OutputError("cannot write " + path.string());
    writer(f);
    f.flush();
    if (!f)
        throw OutputError("failed writing " + path.string());
}

void write_ecdf_csv(std::ostream &out, const SampleLog &log)
{
    out << "link_id,path_loss_db,fraction\n";
    auto emit = [&](const std::string &id, const SampleLog &part)
    {
        const Ecdf e = ecdf(path_losses(part));
        for (std::size_t i = 0; i < e.values().size(); ++i)
            fmt::print(out, "{},{:.6f},{:.6f}\n", id, e.values()[i], e.fractions()[i]);
    };
    for (const auto &id : link_ids(log))
        emit(id, filter_link(log, id));
    emit("*", log);
}

void write_summary_csv(std::ostream &out, const std::vector<std::pair<Deployment, SampleLog>> &cases, double budget)
{
    out << "deployment,link_id,samples,budget_db,outage_fraction,nlos_fraction,min_db,max_db,mean_db\n";
    for (const auto &[deployment, log] : cases)
        for (const LinkSummary &s : summarize(log, budget))
            fmt::print(out, "{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", to_string(deployment), s.link_id,
                       s.samples, budget, s.outage_fraction, s.nlos_fraction, s.min_db, s.max_db, s.mean_db);
}

struct RunOptions
{
    std::string config;
    std::string out_dir;
    std::optional<double> budget;
    std::optional<std::string> deployment;
    bool positions = false;
    std::optional<std::string> replay;
};

int cmd_run(const RunOptions &opt, std::ostream &out)
{
    const auto start = std::chrono::steady_clock::now();
    const std::string config_bytes = read_file(opt.config);
    ScenarioConfig config = parse_scenario_text(config_bytes, fs::path(opt.config).parent_path());
    if (opt.deployment)
        config.deployment = deployment_from_string(*opt.deployment);
    const double budget = opt.budget.value_or(config.radio.link_budget_db);

    const fs::path dir(opt.out_dir);
    ensure_writable_dir(dir);

    const World world = load_world(config);
    Trajectory trajectory;
    if (opt.replay)
    {
        std::ifstream in(*opt.replay);
        if (!in)
            throw InputError("cannot read trace " + *opt.replay);
        trajectory = trajectory_from_trace(config, world, read_position_trace(in));
    }
    else
    {
        trajectory = simulate_mobility(config, world);
    }

    std::vector<std::pair<Deployment, SampleLog>> cases;
    for (Deployment d : {Deployment::none, Deployment::static_only, Deployment::static_uav})
        cases.emplace_back(d, evaluate_trajectory(config, world, trajectory, d));
    const SampleLog &log = std::find_if(cases.begin(), cases.end(), [&](const auto &c) {
                               return c.first == config.deployment;
                           })->second;

    std::vector<fs::path> outputs{dir / "samples.csv", dir / "ecdf.csv", dir / "summary.csv"};
    write_file(outputs[0], [&](std::ostream &f) { write_samples_csv(f, log); });
    write_file(outputs[1], [&](std::ostream &f) { write_ecdf_csv(f, log); });
    write_file(outputs[2], [&](std::ostream &f) { write_summary_csv(f, cases, budget); });
    if (opt.positions)
    {
        outputs.push_back(dir / "positions.csv");
        write_file(outputs.back(),
                   [&](std::ostream &f) { write_position_trace(f, to_position_trace(config, trajectory)); });
    }

    nlohmann::ordered_json manifest;
    manifest["tool_version"] = RISSIM_VERSION;
    manifest["config_sha256"] = sha256_hex(config_bytes);
    manifest["deployment"] = to_string(config.deployment);
    manifest["budget_db"] = budget;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::array({opt.config});
    if (config.map.osm)
        inputs.push_back(config.map.osm->string());
    if (config.dem)
        inputs.push_back(config.dem->string());
    if (opt.replay)
        inputs.push_back(*opt.replay);
    manifest["inputs"] = inputs;
    outputs.push_back(dir / "manifest.json");
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const auto &p : outputs)
        outs.push_back(p.string());
    manifest["outputs"] = outs;
    manifest["wall_clock_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file(outputs.back(), [&](std::ostream &f) { f << manifest.dump(2) << '\n'; });

    const double outage = outage_fraction(log, budget);
    fmt::print(out, "{} samples ({} deployment), outage fraction {:.6f} at {:.2f} dB, written to {}\n", log.size(),
               to_string(config.deployment), outage, budget, dir.string());
    return kExitOk;
}

SampleLog load_samples(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    return read_samples_csv(in);
}

int cmd_compare(const std::string &a, const std::string &b, const std::string &out_dir, double budget,
                std::ostream &out)
{
    const SampleLog baseline = load_samples(a);
    const SampleLog enhanced = load_samples(b);
    const auto by_link = gain_area_by_link(baseline, enhanced);
    const double total = gain_area(baseline, enhanced);

    const fs::path dir(out_dir);
    ensure_writable_dir(dir);
    write_file(dir / "gain.csv",
               [&](std::ostream &f)
               {
                   f << "link_id,gain_area_db_s,outage_fraction_baseline,outage_fraction_enhanced\n";
                   for (const auto &id : link_ids(baseline))
                       fmt::print(f, "{},{:.6f},{:.6f},{:.6f}\n", id, by_link.at(id),
                                  outage_fraction(filter_link(baseline, id), budget),
                                  outage_fraction(filter_link(enhanced, id), budget));
                   fmt::print(f, "*,{:.6f},{:.6f},{:.6f}\n", total, outage_fraction(baseline, budget),
                              outage_fraction(enhanced, budget));
               });

    fmt::print(out, "gain_area_db_s {:.6f}\n", total);
    fmt::print(out, "outage_fraction baseline {:.6f} enhanced {:.6f} (budget {:.2f} dB)\n",
               outage_fraction(baseline, budget), outage_fraction(enhanced, budget), budget);
    return kExitOk;
}

int cmd_fixture_canyon(const std::string &path, const CanyonOptions &options, std::ostream &out)
{
    const fs::path p(path);
    if (p.has_parent_path())
    {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    write_file(p, [&](std::ostream &f) { f << canyon_fixture_json(options); });
    fmt::print(out, "wrote {}\n", p.string());
    return kExitOk;
}

int cmd_validate(const std::string &path, std::ostream &out)
{
    ScenarioConfig config = load_scenario(path);
    const World world = load_world(config);
    ScenarioConfig probe = config;
    probe.duration = 0.0;
    const Trajectory t0 = simulate_mobility(probe, world);
    evaluate_trajectory(probe, world, t0, config.deployment);
    fmt::print(out, "{}: ok ({} nodes, {} panels, {} links, {} buildings)\n", path, config.nodes.size(),
               config.panels.size(), config.links.size(), world.buildings().size());
    return kExitOk;
}

} // namespace

std::string sha256_hex(const std::string &bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::string hex;
    for (unsigned int i = 0; i < len; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"System-level simulation of RIS-assisted mmWave vehicular links", "rissim"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Debug logging");
    app.set_version_flag("--version", RISSIM_VERSION);

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Simulate a scenario and write samples, ECDF, summary and manifest");
    run_cmd->add_option("-c,--config", run.config, "Scenario config (JSON)")->required();
    run_cmd->add_option("-o,--out", run.out_dir, "Output directory")->required();
    run_cmd->add_option("--budget", run.budget, "Link budget in dB (default: config value)");
    run_cmd->add_option("--deployment", run.deployment, "none | static | static_uav (default: config value)");
    run_cmd->add_flag("--positions", run.positions, "Also write positions.csv");
    run_cmd->add_option("--replay", run.replay, "Take node positions from a t,node_id,x,y,z trace");

    std::string cmp_a, cmp_b, cmp_out = ".";
    double cmp_budget = RadioParams{}.link_budget_db;
    auto *cmp_cmd = app.add_subcommand("compare", "Gain area and outage fractions of two samples.csv files");
    cmp_cmd->add_option("-a,--baseline", cmp_a, "Baseline samples.csv")->required();
    cmp_cmd->add_option("-b,--enhanced", cmp_b, "Enhanced samples.csv")->required();
    cmp_cmd->add_option("-o,--out", cmp_out, "Directory for gain.csv");
    cmp_cmd->add_option("--budget", cmp_budget, "Link budget in dB");

    auto *fix_cmd = app.add_subcommand("fixture", "Generate built-in scenario configs");
    fix_cmd->require_subcommand(1);
    std::string fix_out;
    CanyonOptions canyon;
    bool no_uav = false;
    std::string fix_deployment = to_string(canyon.deployment);
    auto *canyon_cmd = fix_cmd->add_subcommand("canyon", "Synthetic street canyon with a corner panel");
    canyon_cmd->add_option("-o,--out", fix_out, "Output config path")->required();
    canyon_cmd->add_flag("--no-uav", no_uav, "Leave out the UAV follower and its panel");
    canyon_cmd->add_option("--deployment", fix_deployment, "none | static | static_uav");
    canyon_cmd->add_option("--duration", canyon.duration, "Simulated seconds");
    canyon_cmd->add_option("--tick", canyon.tick, "Tick in seconds");

    std::string validate_config;
    auto *val_cmd = app.add_subcommand("validate", "Check a scenario config and its map");
    val_cmd->add_option("-c,--config", validate_config, "Scenario config (JSON)")->required();

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::warn);

    try
    {
        if (*run_cmd)
            return cmd_run(run, out);
        if (*cmp_cmd)
            return cmd_compare(cmp_a, cmp_b, cmp_out, cmp_budget, out);
        if (*canyon_cmd)
        {
            canyon.with_uav = !no_uav;
            canyon.deployment = deployment_from_string(fix_deployment);
            if (!(canyon.duration >= 0.0) || !(canyon.tick > 0.0))
                throw ConfigError("duration must be non-negative and tick positive");
            return cmd_fixture_canyon(fix_out, canyon, out);
        }
        if (*val_cmd)
            return cmd_validate(validate_config, out);
    }
    catch (const ConfigError &e)
    {
        fmt::print(err, "config error: {}\n", e.what());
        return kExitInput;
    }
    catch (const IngestError &e)
    {
        fmt::print(err, "ingest error: {}\n", e.what());
        return kExitInput;
    }
    catch (const TerrainError &e)
    {
        fmt::print(err, "ingest error: {}\n", e.what());
        return kExitInput;
    }
    catch (const TraceFormatError &e)
    {
        fmt::print(err, "trace error: {}\n", e.what());
        return kExitInput;
    }
    catch (const SampleFormatError &e)
    {
        fmt::print(err, "samples error: {}\n", e.what());
        return kExitInput;
    }
    catch (const InputError &e)
    {
        fmt::print(err, "input error: {}\n", e.what());
        return kExitInput;
    }
    catch (const OutputError &e)
    {
        fmt::print(err, "output error: {}\n", e.what());
        return kExitOutput;
    }
    catch (const TimestampMismatchError &e)
    {
        fmt::print(err, "timestamp mismatch: {}\n", e.what());
        return kExitTimestamps;
    }
    catch (const EmptyInputError &e)
    {
        fmt::print(err, "input error: {}\n", e.what());
        return kExitInput;
    }
    catch (const std::exception &e)
    {
        fmt::print(err, "error: {}\n", e.what());
        return kExitInput;
    }
    return kExitUsage;
}

} // namespace rissim
