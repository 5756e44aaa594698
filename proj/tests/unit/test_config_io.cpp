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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace risfocus;

namespace
{
std::vector<ConfigEntry> parse(const std::string &text)
{
    std::istringstream in(text);
    return read_config_entries(in, "test.cfg");
}

std::string error_of(const std::string &text)
{
    try
    {
        parse(text);
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return {};
}

std::filesystem::path temp_file(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("risfocus_test_" + name);
}
} // namespace

TEST(ReadConfig, CommentsAndWhitespace)
{
    const auto e = parse("# comment\n\n  preset = setup2   # trailing\nbits=3\n");
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].key, "preset");
    EXPECT_EQ(e[0].value, "setup2");
    EXPECT_EQ(e[0].line, 3);
    EXPECT_EQ(e[1].key, "bits");
    EXPECT_EQ(e[1].value, "3");
}

TEST(ReadConfig, UnknownKeyDiagnostic)
{
    EXPECT_EQ(error_of("bits = 1\n\nfrobnicate = 2\n"), "test.cfg:3: unknown key 'frobnicate'");
}

TEST(ReadConfig, MalformedAndDuplicateLines)
{
    EXPECT_EQ(error_of("bits 1\n"), "test.cfg:1: expected 'key = value'");
    EXPECT_EQ(error_of("= 1\n"), "test.cfg:1: missing key before '='");
    EXPECT_EQ(error_of("bits = 1\nbits = 2\n"), "test.cfg:2: key 'bits' given twice");
}

TEST(ConfigFromEntries, MinimalPresetReference)
{
    const auto cfg = config_from_entries(parse("preset = setup1b\n"));
    const auto ref = preset("setup1b");
    EXPECT_EQ(cfg.preset, "setup1b");
    EXPECT_EQ(cfg.rx.range_m, 1.2);
    EXPECT_EQ(cfg.tx.azimuth_deg, ref.tx.azimuth_deg);
    EXPECT_EQ(cfg.sweep.points, ref.sweep.points);
    EXPECT_EQ(cfg.frequency_hz, 28e9);
    EXPECT_EQ(cfg.trials, 2000u);
    EXPECT_NO_THROW(validate(cfg));
}

TEST(ConfigFromEntries, PresetAndSweepApplyFirst)
{
    const auto cfg = config_from_entries(parse("points = 11\nsweep = azimuth\npreset = setup1a\nbits = 2\n"));
    EXPECT_EQ(cfg.sweep.kind, SweepKind::azimuth);
    EXPECT_EQ(cfg.sweep.points, 11u);
    EXPECT_EQ(cfg.sweep.start, -20.0);
    EXPECT_EQ(cfg.bits, 2);
}

TEST(ConfigFromEntries, AllKeys)
{
    const auto cfg = config_from_entries(parse("freq_ghz = 30\nrows = 16\ncols = 16\nspacing = 0.004m\n"
                                               "tx_az_deg = -10\ntx_el_deg = 2\ntx_dist_m = 2\n"
                                               "rx_az_deg = 5\nrx_el_deg = -1\nrx_dist_m = 0.9\n"
                                               "sweep = grid2d\nstart = 0.4\nstop = 1.4\npoints = 5\n"
                                               "start2 = -4\nstop2 = 4\npoints2 = 3\n"
                                               "distance_model = taylor\nmc = yes\ntrials = 50\nseed = 9\n"
                                               "out = x.json\nformat = json\ndb = true\n"));
    EXPECT_EQ(cfg.frequency_hz, 30e9);
    EXPECT_EQ(cfg.rows, 16u);
    EXPECT_EQ(cfg.spacing.unit, SpacingUnit::meters);
    EXPECT_EQ(cfg.spacing.value, 0.004);
    EXPECT_EQ(cfg.tx.range_m, 2.0);
    EXPECT_EQ(cfg.rx.elevation_deg, -1.0);
    EXPECT_EQ(cfg.sweep.kind, SweepKind::grid2d);
    EXPECT_EQ(cfg.sweep.points2, 3u);
    EXPECT_EQ(cfg.sweep.stop2, 4.0);
    EXPECT_EQ(cfg.distance_model, DistanceModel::taylor);
    EXPECT_TRUE(cfg.with_mc);
    EXPECT_EQ(cfg.trials, 50u);
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.output_path, "x.json");
    EXPECT_EQ(cfg.format, OutputFormat::json);
    EXPECT_TRUE(cfg.db);
}

TEST(ConfigFromEntries, BadValuesCarryLineAndKey)
{
    try
    {
        config_from_entries(parse("preset = setup1a\n\nbits = two\n"));
        FAIL() << "expected ConfigError";
    }
    catch (const ConfigError &e)
    {
        EXPECT_STREQ(e.what(), "line 3: key 'bits': cannot parse 'two' as a non-negative integer");
    }
    EXPECT_THROW(config_from_entries(parse("format = xml\n")), ConfigError);
    EXPECT_THROW(config_from_entries(parse("distance_model = fuzzy\n")), ConfigError);
    EXPECT_THROW(config_from_entries(parse("preset = nope\n")), ConfigError);
    EXPECT_THROW(config_from_entries(parse("freq_ghz = 1e999\n")), ConfigError);
    EXPECT_THROW(config_from_entries(parse("db = maybe\n")), ConfigError);
}

TEST(ParseSpacing, Forms)
{
    const auto wl = parse_spacing("0.5wl");
    EXPECT_EQ(wl.value, 0.5);
    EXPECT_EQ(wl.unit, SpacingUnit::wavelengths);
    const auto m = parse_spacing("0.00535m");
    EXPECT_EQ(m.value, 0.00535);
    EXPECT_EQ(m.unit, SpacingUnit::meters);
    const auto bare = parse_spacing("0.00535");
    EXPECT_EQ(bare.value, 0.00535);
    EXPECT_EQ(bare.unit, SpacingUnit::meters);
    EXPECT_THROW(parse_spacing("wide"), ConfigError);
}

TEST(LoadConfig, FileRoundTripAndErrors)
{
    const auto path = temp_file("load.cfg");
    {
        std::ofstream out(path);
        out << "preset = setup2\nbits = 3\n";
    }
    const auto cfg = load_config(path);
    EXPECT_EQ(cfg.bits, 3);
    EXPECT_EQ(cfg.tx.azimuth_deg, -17.0);
    std::filesystem::remove(path);
    EXPECT_THROW(load_config(temp_file("does_not_exist.cfg")), IoError);

    {
        std::ofstream out(path);
        out << "rows = 8\n";
    }
    EXPECT_THROW(load_config(path), ConfigError);
    std::filesystem::remove(path);
}

TEST(FormatNumber, SeventeenDigits)
{
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(-1.0 / 3.0), "-0.33333333333333331");
    EXPECT_EQ(format_number(2.5e-300), "2.5e-300");
}

TEST(WriteCsv, DepthHeader)
{
    auto cfg = preset("setup1a");
    cfg.sweep.points = 3;
    std::ostringstream out;
    write_csv(run_sweep(cfg), out);
    const auto text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "focal_distance_m,closed_form,quantized_los,normalized_closed_form,normalized_quantized_los");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(WriteJson, RoundTripIsBitExact)
{
    SweepTable t;
    t.kind = SweepKind::azimuth;
    t.columns = {"focal_azimuth_deg", "closed_form", "quantized_los"};
    t.records = {{-20.0, 0.1, 1.0 / 3.0},
                 {0.0, std::numeric_limits<double>::denorm_min(), 425580.834267592869},
                 {std::nextafter(1.0, 2.0), 1e-300, 6.02214076e23}};
    std::stringstream io;
    write_json(t, io);
    const auto back = read_json_records(io);
    EXPECT_EQ(back.kind, SweepKind::azimuth);
    EXPECT_EQ(back.columns, t.columns);
    ASSERT_EQ(back.records.size(), t.records.size());
    for (std::size_t r = 0; r < t.records.size(); ++r)
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            EXPECT_EQ(std::memcmp(&back.records[r][c], &t.records[r][c], sizeof(double)), 0) << r << "," << c;
}

TEST(WriteJson, SweepRoundTrip)
{
    auto cfg = preset("setup1a");
    cfg.sweep.points = 9;
    const auto t = run_sweep(cfg);
    std::stringstream io;
    write_json(t, io);
    const auto back = read_json_records(io);
    EXPECT_EQ(back.kind, SweepKind::depth);
    EXPECT_EQ(back.columns, t.columns);
    EXPECT_EQ(back.records, t.records);
}

TEST(ReadJson, RejectsMalformedInput)
{
    std::istringstream bad("{\"a\": 1}");
    EXPECT_THROW(read_json_records(bad), ConfigError);
    std::istringstream text("[{\"a\": \"x\"}]");
    EXPECT_THROW(read_json_records(text), ConfigError);
    std::istringstream broken("[{");
    EXPECT_THROW(read_json_records(broken), ConfigError);
}

TEST(Emit, FileAndFallback)
{
    auto cfg = preset("setup1a");
    cfg.sweep.points = 3;
    const auto t = run_sweep(cfg);

    std::ostringstream fallback;
    emit(t, cfg, fallback);
    EXPECT_FALSE(fallback.str().empty());

    const auto path = temp_file("emit.json");
    cfg.output_path = path.string();
    cfg.format = OutputFormat::json;
    std::ostringstream unused;
    emit(t, cfg, unused);
    EXPECT_TRUE(unused.str().empty());
    std::ifstream in(path);
    EXPECT_EQ(read_json_records(in).records, t.records);
    std::filesystem::remove(path);

    cfg.output_path = "/nonexistent-dir/out.csv";
    EXPECT_THROW(emit(t, cfg, unused), IoError);
}
