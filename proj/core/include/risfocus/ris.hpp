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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace risfocus
{

/// Wraps an angle into [0, 2pi).
double wrap_two_pi(double phase) noexcept;

/// Wraps an angle into [-pi, pi).
double wrap_pi(double phase) noexcept;

/// Configured RIS phase-shifts, one per element, each held in [0, 2pi).
/// Inputs are wrapped on construction.
class PhaseVector
{
  public:
    PhaseVector() = default;
    explicit PhaseVector(std::vector<double> phases);

    std::size_t size() const noexcept { return phases_.size(); }
    std::span<const double> values() const noexcept { return phases_; }
    double operator[](std::size_t n) const { return phases_[n]; }

  private:
    std::vector<double> phases_;
};

/// Per-element quantization error epsilon_n = implemented - ideal, in radians.
class DeviationVector
{
  public:
    DeviationVector() = default;
    explicit DeviationVector(std::vector<double> deviations) : deviations_(std::move(deviations)) {}

    static DeviationVector zeros(std::size_t n) { return DeviationVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const noexcept { return deviations_.size(); }
    std::span<const double> values() const noexcept { return deviations_; }
    double operator[](std::size_t n) const { return deviations_[n]; }

  private:
    std::vector<double> deviations_;
};

/// A b-bit phase quantizer with 2^b levels 2 pi k / 2^b. Valid for 1 <= b <= 62;
/// large b serves as a numeric proxy for continuous phase control.
class QuantizerSpec
{
  public:
    explicit QuantizerSpec(int bits);

    int bits() const noexcept { return bits_; }
    std::uint64_t level_count() const noexcept { return std::uint64_t{1} << bits_; }
    double step() const noexcept;          // 2 pi / 2^b
    double max_deviation() const noexcept; // pi / 2^b

  private:
    int bits_;
};

struct QuantizedPhases
{
    PhaseVector phases;
    DeviationVector deviations;
};

/// phi_n = arg(h_s) - arg(h_r,n h_t,n) mod 2pi, with arg(0) taken as 0.
/// Throws std::invalid_argument on length mismatch.
PhaseVector ideal_phases(const LosChannel &h_t, const LosChannel &h_r, Complex h_s = {});

/// Unquantized focusing configuration for a transmitter and a focal point
/// (unit-coefficient channels, no static path).
PhaseVector focus_phases(const ElementGrid &grid, const SphericalPoint &tx, const SphericalPoint &focal,
                         const CarrierSpec &carrier, DistanceModel model = DistanceModel::exact);

/// Nearest-level quantization on the circle. Exact midpoints go to the
/// lower-indexed level. Deviations lie in [-pi/2^b, pi/2^b].
QuantizedPhases quantize(const PhaseVector &phases, const QuantizerSpec &q);

/// The 2^b implementable phases. Throws std::length_error when 2^b levels
/// would not fit in memory (b > 24).
std::vector<double> phase_set(const QuantizerSpec &q);

} // namespace risfocus
