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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace risfocus
{

enum class AxisKind
{
    focal_distance, // meters
    azimuth,        // degrees
    elevation,      // degrees
    depth_offset    // 1/m
};

/// A sampled gain sweep. The axis must be strictly increasing, both arrays of
/// equal length >= 2, and all values finite and non-negative.
class GainCurve
{
  public:
    GainCurve(std::vector<double> axis, std::vector<double> values, AxisKind kind);

    std::span<const double> axis() const noexcept { return axis_; }
    std::span<const double> values() const noexcept { return values_; }
    AxisKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return axis_.size(); }

  private:
    std::vector<double> axis_;
    std::vector<double> values_;
    AxisKind kind_;
};

/// Half-power region around the peak. A missing bound means the curve stays at
/// or above half its peak all the way to that end of the sampled axis.
struct HalfPowerInterval
{
    std::optional<double> lower;
    std::optional<double> upper;
    double peak = 0.0;

    bool bounded() const noexcept { return lower.has_value() && upper.has_value(); }
    std::optional<double> width() const noexcept;
};

/// Divides by the maximum. Throws std::invalid_argument for an all-zero curve.
GainCurve normalize_peak(const GainCurve &curve);

/// Axis value of the maximum; ties go to the smallest axis value.
double peak_location(const GainCurve &curve);

/// Contiguous region around the peak where value >= max / 2, with linear
/// interpolation at the two crossings.
HalfPowerInterval half_power_interval(const GainCurve &curve);

/// Centered moving average (window is odd; truncated at the ends). Used before
/// half-power extraction on rippled quantized curves.
GainCurve moving_average(const GainCurve &curve, std::size_t window = 5);

} // namespace risfocus
