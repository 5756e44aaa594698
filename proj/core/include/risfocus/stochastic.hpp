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

namespace risfocus
{

/// Counter-based random source: every draw is a pure function of
/// (seed, trial, index), so trials can be evaluated in any order or in
/// parallel without changing results.
class CounterRng
{
  public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t trial, std::uint64_t index) const noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t trial, std::uint64_t index) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

  private:
    std::uint64_t seed_;
};

struct McResult
{
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// Focus/evaluation pair for averaging over random deviations.
struct GainScenario
{
    ElementGrid grid;
    CarrierSpec carrier;
    SphericalPoint focal;
    SphericalPoint eval;
    DistanceModel model = DistanceModel::exact;
};

/// Full LOS link: the RIS is configured for (tx, focal), the receiver sits at eval.
struct LosScenario
{
    ElementGrid grid;
    CarrierSpec carrier;
    SphericalPoint tx;
    SphericalPoint focal;
    SphericalPoint eval;
    DistanceModel model = DistanceModel::exact;
};

/// N independent draws uniform on [-pi/2^b, pi/2^b), reproducible per (seed, trial).
DeviationVector sample_deviations(std::size_t n, const QuantizerSpec &q, std::uint64_t seed, std::uint64_t trial);

/// Sample mean and standard error of the array gain over `trials` deviation
/// vectors drawn by sample_deviations. Trials run concurrently; the reduction is
/// in trial order, so results are bit-identical for a given input.
/// Throws std::invalid_argument when trials < 2.
McResult mc_mean_gain(const GainScenario &scenario, const QuantizerSpec &q, std::size_t trials, std::uint64_t seed);

/// Deterministic gain of the quantized configuration: ideal phases for
/// (tx, focal), nearest-level quantization, then |h|^2 at eval with unit
/// channel coefficients.
double quantized_los_gain(const LosScenario &scenario, const QuantizerSpec &q);

} // namespace risfocus
