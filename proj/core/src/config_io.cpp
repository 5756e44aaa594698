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

#include "risfocus/config_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

namespace risfocus
{

namespace
{
std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
{
    throw ConfigError("key '" + std::string(key) + "': cannot parse '" + std::string(value) + "' as " +
                      std::string(expected));
}

double parse_double(std::string_view key, std::string_view text)
{
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v))
        bad_value(key, text, "a number");
    return v;
}

template <typename Int> Int parse_integer(std::string_view key, std::string_view text)
{
    Int v{};
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end)
        bad_value(key, text, "a non-negative integer");
    return v;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    bad_value(key, text, "a boolean");
}

SweepKind parse_sweep_kind(std::string_view text)
{
    if (text == "depth")
        return SweepKind::depth;
    if (text == "azimuth")
        return SweepKind::azimuth;
    if (text == "grid2d")
        return SweepKind::grid2d;
    if (text == "mc-validate")
        return SweepKind::mc_validate;
    bad_value("sweep", text, "depth|azimuth|grid2d|mc-validate");
}

std::string source_prefix(std::string_view source, int line)
{
    return std::string(source) + ":" + std::to_string(line) + ": ";
}
} // namespace

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys{
        "preset",    "sweep",     "freq_ghz",  "rows",      "cols",      "spacing", "bits",
        "tx_az_deg", "tx_el_deg", "tx_dist_m", "rx_az_deg", "rx_el_deg", "rx_dist_m", "start",
        "stop",      "points",    "start2",    "stop2",     "points2",   "distance_model", "mc",
        "trials",    "seed",      "out",       "format",    "db"};
    return keys;
}

Spacing parse_spacing(std::string_view text)
{
    text = trim(text);
    if (text.size() > 2 && text.substr(text.size() - 2) == "wl")
        return {parse_double("spacing", trim(text.substr(0, text.size() - 2))), SpacingUnit::wavelengths};
    if (text.size() > 1 && text.back() == 'm')
        return {parse_double("spacing", trim(text.substr(0, text.size() - 1))), SpacingUnit::meters};
    return {parse_double("spacing", text), SpacingUnit::meters};
}

void apply_setting(ExperimentConfig &cfg, std::string_view key, std::string_view raw)
{
    const auto value = trim(raw);
    if (key == "preset")
    {
        const auto out = cfg.output_path;
        cfg = preset(value);
        cfg.output_path = out;
    }
    else if (key == "sweep")
        set_sweep_kind(cfg, parse_sweep_kind(value));
    else if (key == "freq_ghz")
        cfg.frequency_hz = parse_double(key, value) * 1e9;
    else if (key == "rows")
        cfg.rows = parse_integer<std::size_t>(key, value);
    else if (key == "cols")
        cfg.cols = parse_integer<std::size_t>(key, value);
    else if (key == "spacing")
        cfg.spacing = parse_spacing(value);
    else if (key == "bits")
        cfg.bits = parse_integer<int>(key, value);
    else if (key == "tx_az_deg")
        cfg.tx.azimuth_deg = parse_double(key, value);
    else if (key == "tx_el_deg")
        cfg.tx.elevation_deg = parse_double(key, value);
    else if (key == "tx_dist_m")
        cfg.tx.range_m = parse_double(key, value);
    else if (key == "rx_az_deg")
        cfg.rx.azimuth_deg = parse_double(key, value);
    else if (key == "rx_el_deg")
        cfg.rx.elevation_deg = parse_double(key, value);
    else if (key == "rx_dist_m")
        cfg.rx.range_m = parse_double(key, value);
    else if (key == "start")
        cfg.sweep.start = parse_double(key, value);
    else if (key == "stop")
        cfg.sweep.stop = parse_double(key, value);
    else if (key == "points")
        cfg.sweep.points = parse_integer<std::size_t>(key, value);
    else if (key == "start2")
        cfg.sweep.start2 = parse_double(key, value);
    else if (key == "stop2")
        cfg.sweep.stop2 = parse_double(key, value);
    else if (key == "points2")
        cfg.sweep.points2 = parse_integer<std::size_t>(key, value);
    else if (key == "distance_model")
    {
        if (value == "exact")
            cfg.distance_model = DistanceModel::exact;
        else if (value == "taylor")
            cfg.distance_model = DistanceModel::taylor;
        else
            bad_value(key, value, "exact|taylor");
    }
    else if (key == "mc")
        cfg.with_mc = parse_bool(key, value);
    else if (key == "trials")
        cfg.trials = parse_integer<std::size_t>(key, value);
    else if (key == "seed")
        cfg.seed = parse_integer<std::uint64_t>(key, value);
    else if (key == "out")
        cfg.output_path = std::string(value);
    else if (key == "format")
    {
        if (value == "csv")
            cfg.format = OutputFormat::csv;
        else if (value == "json")
            cfg.format = OutputFormat::json;
        else
            bad_value(key, value, "csv|json");
    }
    else if (key == "db")
        cfg.db = parse_bool(key, value);
    else
        throw ConfigError("unknown key '" + std::string(key) + "'");
}

std::vector<ConfigEntry> read_config_entries(std::istream &in, std::string_view source)
{
    const auto &keys = config_keys();
    std::vector<ConfigEntry> entries;
    std::set<std::string, std::less<>> seen;
    std::string line;
    int number = 0;
    while (std::getline(in, line))
    {
        ++number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(source_prefix(source, number) + "expected 'key = value'");
        const auto key = trim(view.substr(0, eq));
        const auto value = trim(view.substr(eq + 1));
        if (key.empty())
            throw ConfigError(source_prefix(source, number) + "missing key before '='");
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError(source_prefix(source, number) + "unknown key '" + std::string(key) + "'");
        if (!seen.insert(std::string(key)).second)
            throw ConfigError(source_prefix(source, number) + "key '" + std::string(key) + "' given twice");
        entries.push_back({std::string(key), std::string(value), number});
    }
    return entries;
}

ExperimentConfig config_from_entries(const std::vector<ConfigEntry> &entries)
{
    ExperimentConfig cfg;
    auto apply = [&cfg](const ConfigEntry &e) {
        try
        {
            apply_setting(cfg, e.key, e.value);
        }
        catch (const ConfigError &err)
        {
            throw ConfigError("line " + std::to_string(e.line) + ": " + err.what());
        }
    };
    for (const auto &e : entries)
        if (e.key == "preset")
            apply(e);
    for (const auto &e : entries)
        if (e.key == "sweep")
            apply(e);
    for (const auto &e : entries)
        if (e.key != "preset" && e.key != "sweep")
            apply(e);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config '" + path.string() + "'");
    auto cfg = config_from_entries(read_config_entries(in, path.string()));
    validate(cfg);
    return cfg;
}

std::string format_number(double value)
{
    char buf[40];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_csv(const SweepTable &table, std::ostream &out)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto &r : table.records)
    {
        for (std::size_t c = 0; c < r.size(); ++c)
            out << (c ? "," : "") << format_number(r[c]);
        out << '\n';
    }
}

void write_json(const SweepTable &table, std::ostream &out)
{
    out << "[\n";
    for (std::size_t i = 0; i < table.records.size(); ++i)
    {
        const auto &r = table.records[i];
        out << "  {";
        for (std::size_t c = 0; c < r.size(); ++c)
            out << (c ? ", " : "") << '"' << table.columns[c] << "\": " << format_number(r[c]);
        out << (i + 1 < table.records.size() ? "},\n" : "}\n");
    }
    out << "]\n";
}

void emit(const SweepTable &table, const ExperimentConfig &cfg, std::ostream &fallback)
{
    auto write = [&](std::ostream &os) {
        if (cfg.format == OutputFormat::json)
            write_json(table, os);
        else
            write_csv(table, os);
    };
    if (cfg.output_path.empty())
    {
        write(fallback);
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + cfg.output_path + "' for writing");
    write(file);
    file.flush();
    if (!file)
        throw IoError("failed writing '" + cfg.output_path + "'");
}

SweepTable read_json_records(std::istream &in)
{
    nlohmann::ordered_json doc;
    try
    {
        doc = nlohmann::ordered_json::parse(in);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ConfigError(std::string("invalid JSON records: ") + e.what());
    }
    if (!doc.is_array())
        throw ConfigError("JSON records must be an array");

    SweepTable table;
    for (const auto &rec : doc)
    {
        if (!rec.is_object())
            throw ConfigError("JSON record is not an object");
        if (table.columns.empty())
            for (const auto &[k, _] : rec.items())
                table.columns.push_back(k);
        if (rec.size() != table.columns.size())
            throw ConfigError("JSON records have inconsistent fields");
        std::vector<double> row;
        row.reserve(table.columns.size());
        for (const auto &name : table.columns)
        {
            const auto it = rec.find(name);
            if (it == rec.end() || !it->is_number())
                throw ConfigError("JSON record lacks numeric field '" + name + "'");
            row.push_back(it->get<double>());
        }
        table.records.push_back(std::move(row));
    }

    const auto has = [&](std::string_view c) {
        return std::find(table.columns.begin(), table.columns.end(), c) != table.columns.end();
    };
    if (has("depth_offset_per_m"))
        table.kind = SweepKind::mc_validate;
    else if (has("focal_distance_m") && has("focal_azimuth_deg"))
        table.kind = SweepKind::grid2d;
    else if (has("focal_azimuth_deg"))
        table.kind = SweepKind::azimuth;
    else
        table.kind = SweepKind::depth;
    return table;
}

} // namespace risfocus
