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

#include "risfocus/channel.hpp"
#include "risfocus/geometry.hpp"
#include "risfocus/ris.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace risfocus
{

/// Invalid or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output (CLI exit code 3).
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepKind
{
    depth,      // focal distance F, meters
    azimuth,    // focal azimuth, degrees
    grid2d,     // focal distance x focal azimuth
    mc_validate // depth offset delta, 1/m
};

enum class OutputFormat
{
    csv,
    json
};

std::string_view to_string(SweepKind kind) noexcept;
std::string_view to_string(DistanceModel model) noexcept;

enum class SpacingUnit
{
    meters,
    wavelengths
};

struct Spacing
{
    double value = 0.5;
    SpacingUnit unit = SpacingUnit::wavelengths;

    double meters(const CarrierSpec &carrier) const noexcept
    {
        return unit == SpacingUnit::meters ? value : value * carrier.wavelength();
    }
};

/// Transmitter/receiver placement as written in configs: degrees and meters.
struct Placement
{
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
    double range_m = 1.0;

    SphericalPoint point() const { return SphericalPoint::from_degrees(azimuth_deg, elevation_deg, range_m); }
};

struct SweepSpec
{
    SweepKind kind = SweepKind::depth;
    double start = 0.2;
    double stop = 3.0;
    std::size_t points = 281;
    // Second (azimuth) axis, grid2d only.
    double start2 = 0.0;
    double stop2 = 0.0;
    std::size_t points2 = 0;
};

/// Default range and resolution for each sweep kind.
SweepSpec default_sweep(SweepKind kind) noexcept;

struct ExperimentConfig
{
    std::string preset = "setup1a";
    double frequency_hz = 28e9;
    std::size_t rows = 32;
    std::size_t cols = 32;
    Spacing spacing{};
    int bits = 1;
    Placement tx{-25.0, 0.0, 1.0};
    Placement rx{7.0, 0.0, 0.6};
    SweepSpec sweep{};
    DistanceModel distance_model = DistanceModel::exact;
    bool with_mc = false; // add mc_mean / mc_std_error to depth and azimuth sweeps
    std::size_t trials = 2000;
    std::uint64_t seed = 1;
    std::string output_path; // empty: standard output
    OutputFormat format = OutputFormat::csv;
    bool db = false;

    CarrierSpec carrier() const { return CarrierSpec(frequency_hz); }
    ElementGrid grid() const { return build_upa(rows, cols, spacing.meters(carrier())); }
    QuantizerSpec quantizer() const { return QuantizerSpec(bits); }
};

/// Switches the sweep kind, resetting the sweep axes to that kind's defaults
/// when the kind actually changes. Entering mc_validate also selects the Taylor
/// distance model; set distance_model afterwards to override.
void set_sweep_kind(ExperimentConfig &cfg, SweepKind kind);

/// Checks every field; throws ConfigError naming the offending key.
void validate(const ExperimentConfig &cfg);

const std::vector<std::string> &preset_names();
std::string_view preset_description(std::string_view name);

/// setup1a, setup1b, setup2. Throws ConfigError for unknown names.
ExperimentConfig preset(std::string_view name);

/// Columnar sweep output, one record per sweep point in axis order
/// (grid2d: distance outer, azimuth inner).
struct SweepTable
{
    SweepKind kind = SweepKind::depth;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> records;

    std::size_t size() const noexcept { return records.size(); }
    std::size_t column_index(std::string_view name) const; // throws std::out_of_range
    std::vector<double> column(std::string_view name) const;
};

SweepTable run_depth_sweep(const ExperimentConfig &cfg);
SweepTable run_angle_sweep(const ExperimentConfig &cfg);
SweepTable run_grid_sweep(const ExperimentConfig &cfg);
SweepTable run_mc_validation(const ExperimentConfig &cfg);

/// Dispatches on cfg.sweep.kind.
SweepTable run_sweep(const ExperimentConfig &cfg);

/// Number of mc-validate records whose mc_pass column is 0.
std::size_t failing_points(const SweepTable &table);

} // namespace risfocus
