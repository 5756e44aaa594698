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

#pragma once

#include "risfocus/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace risfocus
{

/// One `key = value` line of a config file.
struct ConfigEntry
{
    std::string key;
    std::string value;
    int line = 0;
};

/// Reads flat `key = value` lines; `#` starts a comment, blank lines are skipped.
/// Throws ConfigError with "<source>:<line>" diagnostics on malformed lines,
/// unknown keys, or repeated keys.
std::vector<ConfigEntry> read_config_entries(std::istream &in, std::string_view source = "<config>");

/// Keys accepted in config files. CLI flags use the same names with '-' for '_'.
const std::vector<std::string> &config_keys();

/// Applies one setting. Throws ConfigError on unknown keys or bad values.
///
///   preset          setup1a | setup1b | setup2
///   sweep           depth | azimuth | grid2d | mc-validate
///   freq_ghz        carrier frequency, GHz
///   rows, cols      grid size
///   spacing         "0.5wl" (wavelengths), "0.00535m" or "0.00535" (meters)
///   bits            quantizer resolution b
///   tx_az_deg, tx_el_deg, tx_dist_m, rx_az_deg, rx_el_deg, rx_dist_m
///   start, stop, points, start2, stop2, points2
///   distance_model  exact | taylor
///   mc              true | false (MC columns in depth/azimuth sweeps)
///   trials, seed
///   out             output path (empty: standard output)
///   format          csv | json
///   db              true | false
void apply_setting(ExperimentConfig &cfg, std::string_view key, std::string_view value);

/// Builds a config from entries: the preset (if any) first, then the sweep kind,
/// then every other key in file order.
ExperimentConfig config_from_entries(const std::vector<ConfigEntry> &entries);

/// Reads and validates a config file. Throws IoError if unreadable.
ExperimentConfig load_config(const std::filesystem::path &path);

Spacing parse_spacing(std::string_view text);

/// %.17g, the serialization used for every number in CSV and JSON output.
std::string format_number(double value);

void write_csv(const SweepTable &table, std::ostream &out);
void write_json(const SweepTable &table, std::ostream &out);

/// Writes the table in cfg.format to cfg.output_path, or to `fallback` when the
/// path is empty. Throws IoError when the file cannot be written.
void emit(const SweepTable &table, const ExperimentConfig &cfg, std::ostream &fallback);

/// Reads a JSON array of flat records written by write_json.
SweepTable read_json_records(std::istream &in);

} // namespace risfocus
