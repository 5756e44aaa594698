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

#include "risfocus/gain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace risfocus;

namespace
{
const CarrierSpec carrier(28e9);
const ElementGrid grid_32 = build_upa(32, 32, carrier.wavelength() / 2);
} // namespace

TEST(ChannelCoefficient, UnitChannelsZeroPhases)
{
    const ArrayResponse ones(std::vector<Complex>(64, 1.0));
    const auto h = channel_coefficient(0.0, los_channel(1.0, ones), los_channel(1.0, ones),
                                       PhaseVector(std::vector<double>(64, 0.0)));
    EXPECT_NEAR(std::abs(h - Complex(64.0, 0.0)), 0.0, 1e-12);
}

TEST(ChannelCoefficient, StaticPathOnly)
{
    const ArrayResponse ones(std::vector<Complex>(8, 1.0));
    const auto h = channel_coefficient(5.0, los_channel(0.0, ones), los_channel(0.0, ones),
                                       PhaseVector(std::vector<double>(8, 1.0)));
    EXPECT_EQ(h, Complex(5.0, 0.0));
}

TEST(ChannelCoefficient, IdealPhasesAddCoherently)
{
    const Complex at{0.3, 0.1}, ar{-0.2, 0.6}, hs{1.5, 0.5};
    const auto ht = los_channel(at, array_response(grid_32, SphericalPoint::from_degrees(-25, 0, 1), carrier));
    const auto hr = los_channel(ar, array_response(grid_32, SphericalPoint::from_degrees(7, 0, 0.6), carrier));
    const auto h = channel_coefficient(hs, ht, hr, ideal_phases(ht, hr, hs));
    const double expected = 1024 * std::abs(ar * at) + std::abs(hs);
    EXPECT_NEAR(std::abs(h), expected, 1e-9 * expected);
}

TEST(ChannelCoefficient, GainCeilingWithIdealPhases)
{
    const auto ht = los_channel(1.0, array_response(grid_32, SphericalPoint::from_degrees(-25, 0, 1), carrier));
    const auto hr = los_channel(1.0, array_response(grid_32, SphericalPoint::from_degrees(7, 0, 0.6), carrier));
    const auto h = channel_coefficient(0.0, ht, hr, ideal_phases(ht, hr));
    EXPECT_NEAR(std::norm(h), 1024.0 * 1024.0, 1e-9 * 1024 * 1024);
}

TEST(ChannelCoefficient, RejectsLengthMismatch)
{
    const ArrayResponse ones(std::vector<Complex>(4, 1.0));
    EXPECT_THROW(channel_coefficient(0.0, los_channel(1.0, ones), los_channel(1.0, ones),
                                     PhaseVector(std::vector<double>(3, 0.0))),
                 std::invalid_argument);
}

TEST(ExactArrayGain, MatchedFocusIsNSquared)
{
    const auto p = SphericalPoint::from_degrees(7, 0, 0.6);
    for (auto model : {DistanceModel::exact, DistanceModel::taylor})
        EXPECT_NEAR(exact_array_gain(grid_32, carrier, p, p, DeviationVector::zeros(1024), model), 1024.0 * 1024.0,
                    1e-9 * 1024 * 1024);
}

TEST(ExactArrayGain, OneBitConfigurationNearFourOverPiSquared)
{
    const auto tx = SphericalPoint::from_degrees(-25, 0, 1);
    const auto rx = SphericalPoint::from_degrees(7, 0, 0.6);
    const auto q = quantize(focus_phases(grid_32, tx, rx, carrier), QuantizerSpec(1));
    const double g = exact_array_gain(grid_32, carrier, rx, rx, q.deviations) / (1024.0 * 1024.0);
    EXPECT_GT(g, 0.38);
    EXPECT_LT(g, 0.43);
}

TEST(ExactArrayGain, SymmetricInFocalAndReceiverDistance)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(0.1, 10.0);
    const auto base = SphericalPoint::from_degrees(7, 0, 1.0);
    const auto zeros = DeviationVector::zeros(grid_32.size());
    for (int k = 0; k < 100; ++k)
    {
        const double f = d(rng), r = d(rng);
        for (auto model : {DistanceModel::exact, DistanceModel::taylor})
        {
            const double g1 = exact_array_gain(grid_32, carrier, base.with_range(f), base.with_range(r), zeros, model);
            const double g2 = exact_array_gain(grid_32, carrier, base.with_range(r), base.with_range(f), zeros, model);
            EXPECT_NEAR(g1, g2, 1e-12 * std::max(g1, 1.0));
        }
    }
}

TEST(ExactArrayGain, GlobalPhaseInvariance)
{
    const auto focal = SphericalPoint::from_degrees(7, 0, 0.9);
    const auto eval = SphericalPoint::from_degrees(7, 0, 0.6);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<double> eps(grid_32.size()), shifted(grid_32.size());
    for (std::size_t n = 0; n < eps.size(); ++n)
    {
        eps[n] = u(rng);
        shifted[n] = eps[n] + 1.234;
    }
    const double g1 = exact_array_gain(grid_32, carrier, focal, eval, DeviationVector(eps));
    const double g2 = exact_array_gain(grid_32, carrier, focal, eval, DeviationVector(shifted));
    EXPECT_NEAR(g1, g2, 1e-9 * g1);
}

TEST(ExactArrayGain, NeverExceedsNSquared)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> az(-0.5, 0.5), d(0.2, 4.0), e(-0.8, 0.8);
    const auto g = build_upa(8, 8, carrier.wavelength() / 2);
    for (int k = 0; k < 200; ++k)
    {
        std::vector<double> eps(g.size());
        for (auto &x : eps)
            x = e(rng);
        const double v = exact_array_gain(g, carrier, {az(rng), 0.0, d(rng)}, {az(rng), 0.0, d(rng)},
                                          DeviationVector(eps));
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 64.0 * 64.0 * (1 + 1e-12));
    }
}

TEST(ArrayGain, WeightsAndDeviations)
{
    const std::vector<Complex> w(4, Complex(1.0, 0.0));
    EXPECT_DOUBLE_EQ(array_gain(w), 16.0);
    const std::vector<double> eps{0.0, std::numbers::pi, 0.0, std::numbers::pi};
    EXPECT_NEAR(array_gain(w, eps), 0.0, 1e-24);
    EXPECT_THROW(array_gain(w, std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST(CouplingWeights, MatchedFocusIsAllOnes)
{
    const auto p = SphericalPoint::from_degrees(-10, 5, 0.4);
    for (const auto &w : coupling_weights(grid_32, carrier, p, p))
        EXPECT_NEAR(std::abs(w - Complex(1.0, 0.0)), 0.0, 1e-12);
}

TEST(AvgChannelGain, ContinuousLimit)
{
    for (std::size_t n : {1u, 64u, 1024u})
        EXPECT_NEAR(avg_channel_gain(n, QuantizerSpec(60), 2.5), 2.5 * n * n, 1e-9 * 2.5 * n * n);
}

TEST(AvgChannelGain, SingleElement)
{
    for (int b : {1, 2, 3, 8})
        EXPECT_NEAR(avg_channel_gain(1, QuantizerSpec(b), 3.0), 3.0, 1e-12);
}

TEST(AvgChannelGain, ThirtyTwoSquareOneBit)
{
    EXPECT_NEAR(avg_channel_gain(1024, QuantizerSpec(1)), 425580.834267592869, 1e-8);
    const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
    EXPECT_NEAR(avg_channel_gain(1024, QuantizerSpec(1)),
                1024.0 * 1024.0 * four_over_pi2 + 1024.0 * (1 - four_over_pi2), 1e-8);
}

TEST(AvgChannelGain, RejectsZeroElements)
{
    EXPECT_THROW(avg_channel_gain(0, QuantizerSpec(1)), std::invalid_argument);
}
