// SPDX-License-Identifier: Apache-2.0
//
// risfocus: near-field beamfocusing simulator for b-bit reconfigurable intelligent surfaces
// Copyright (C) 2026 The risfocus authors
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

// risfocus command-line front end: one subcommand per sweep kind.
// Settings precedence: flag > config file > preset default.
// Exit codes: 0 success, 2 config/validation error, 3 I/O error,
// 4 mc-validate reported failing points.

#include "risfocus/config_io.hpp"
#include "risfocus/experiment.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace
{

constexpr int exit_config = 2;
constexpr int exit_io = 3;
constexpr int exit_mc_failed = 4;

// Flag values are kept as text and routed through the same setter as config
// files, so both paths share parsing and diagnostics.
struct SweepOptions
{
    std::optional<std::string> preset;
    std::optional<std::string> config;
    std::map<std::string, std::string> values;
    bool db = false;
    bool mc = false;
};

void add_sweep_options(CLI::App &cmd, SweepOptions &o)
{
    cmd.add_option("--preset", o.preset, "Start from a named scenario (see preset-list)");
    cmd.add_option("--config", o.config, "Flat key = value config file");

    const std::pair<const char *, const char *> valued[] = {
        {"--freq-ghz", "Carrier frequency in GHz"},
        {"--rows", "RIS rows"},
        {"--cols", "RIS columns"},
        {"--spacing", "Element pitch: '0.5wl' (wavelengths) or meters"},
        {"--bits", "Phase resolution b"},
        {"--tx-az-deg", "Transmitter azimuth (deg)"},
        {"--tx-el-deg", "Transmitter elevation (deg)"},
        {"--tx-dist-m", "Transmitter distance (m)"},
        {"--rx-az-deg", "Receiver azimuth (deg)"},
        {"--rx-el-deg", "Receiver elevation (deg)"},
        {"--rx-dist-m", "Receiver distance (m)"},
        {"--start", "Sweep start"},
        {"--stop", "Sweep stop"},
        {"--points", "Sweep points"},
        {"--start2", "Second-axis start (grid-sweep azimuth, deg)"},
        {"--stop2", "Second-axis stop (grid-sweep azimuth, deg)"},
        {"--points2", "Second-axis points"},
        {"--trials", "Monte Carlo trials"},
        {"--seed", "Monte Carlo seed"},
        {"--distance-model", "exact | taylor"},
        {"--out", "Output path (default: stdout)"},
        {"--format", "csv | json"},
    };
    for (const auto &[flag, help] : valued)
    {
        std::string key(flag + 2);
        std::replace(key.begin(), key.end(), '-', '_');
        cmd.add_option_function<std::string>(
            flag, [&o, key](const std::string &v) { o.values[key] = v; }, help);
    }
    cmd.add_flag("--db", o.db, "Append dB columns for the normalized gains");
    cmd.add_flag("--mc", o.mc, "Add Monte Carlo columns to depth/angle sweeps");
}

risfocus::ExperimentConfig resolve_config(const SweepOptions &o, risfocus::SweepKind kind)
{
    using namespace risfocus;

    std::vector<ConfigEntry> entries;
    if (o.config)
    {
        std::ifstream in(*o.config);
        if (!in)
            throw IoError("cannot read config '" + *o.config + "'");
        entries = read_config_entries(in, *o.config);
    }

    std::string preset_name = "setup1a";
    for (const auto &e : entries)
        if (e.key == "preset")
            preset_name = e.value;
    if (o.preset)
        preset_name = *o.preset;

    auto cfg = preset(preset_name);
    set_sweep_kind(cfg, kind);

    for (const auto &e : entries)
    {
        if (e.key == "preset")
            continue;
        try
        {
            if (e.key == "sweep")
            {
                if (e.value != to_string(kind))
                    throw ConfigError("sweep '" + e.value + "' conflicts with the '" + std::string(to_string(kind)) +
                                      "' subcommand");
                continue;
            }
            apply_setting(cfg, e.key, e.value);
        }
        catch (const ConfigError &err)
        {
            throw ConfigError(*o.config + ":" + std::to_string(e.line) + ": " + err.what());
        }
    }

    for (const auto &[key, value] : o.values)
        apply_setting(cfg, key, value);
    if (o.db)
        cfg.db = true;
    if (o.mc)
        cfg.with_mc = true;

    validate(cfg);
    return cfg;
}

int run(const SweepOptions &o, risfocus::SweepKind kind)
{
    using namespace risfocus;
    try
    {
        const auto cfg = resolve_config(o, kind);
        const auto table = run_sweep(cfg);
        emit(table, cfg, std::cout);
        if (kind == SweepKind::mc_validate)
        {
            const auto failed = failing_points(table);
            if (failed > 0)
            {
                std::cerr << "mc-validate: " << failed << " of " << table.size()
                          << " points outside 3 standard errors\n";
                return exit_mc_failed;
            }
        }
        return 0;
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near-field beamfocusing simulator for b-bit reconfigurable intelligent surfaces"};
    app.require_subcommand(1);

    struct Command
    {
        const char *name;
        const char *help;
        risfocus::SweepKind kind;
        SweepOptions options;
        CLI::App *app = nullptr;
    };
    Command commands[] = {
        {"depth-sweep", "Array gain versus focal distance", risfocus::SweepKind::depth, {}},
        {"angle-sweep", "Array gain versus focal azimuth", risfocus::SweepKind::azimuth, {}},
        {"grid-sweep", "Array gain over focal distance x azimuth", risfocus::SweepKind::grid2d, {}},
        {"mc-validate", "Monte Carlo mean versus the depth closed form", risfocus::SweepKind::mc_validate, {}},
    };
    for (auto &c : commands)
    {
        c.app = app.add_subcommand(c.name, c.help);
        add_sweep_options(*c.app, c.options);
    }
    auto *list = app.add_subcommand("preset-list", "List the built-in scenarios");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    if (list->parsed())
    {
        for (const auto &name : risfocus::preset_names())
            std::cout << name << "\t" << risfocus::preset_description(name) << '\n';
        return 0;
    }
    for (auto &c : commands)
        if (c.app->parsed())
            return run(c.options, c.kind);
    return exit_config;
}
