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

#include "risfocus/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace risfocus;

TEST(CarrierSpec, Wavelength)
{
    const CarrierSpec c(28e9);
    EXPECT_EQ(c.frequency(), 28e9);
    EXPECT_NEAR(c.wavelength(), 0.0107068735, 1e-10);
    EXPECT_NEAR(c.wavelength() * c.frequency(), speed_of_light, 1e-9 * speed_of_light);
    EXPECT_NEAR(c.wavenumber(), 2 * std::numbers::pi / c.wavelength(), 1e-12);
}

TEST(CarrierSpec, RejectsNonPositiveFrequency)
{
    EXPECT_THROW(CarrierSpec{0.0}, std::invalid_argument);
    EXPECT_THROW(CarrierSpec{-1e9}, std::invalid_argument);
    EXPECT_THROW(CarrierSpec{INFINITY}, std::invalid_argument);
}

TEST(ArrayResponse, SingleElementIsOne)
{
    const CarrierSpec c(28e9);
    const auto a = array_response(build_upa(1, 1, c.wavelength() / 2), {0.3, 0.2, 0.8}, c);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0], Complex(1.0, 0.0));
}

TEST(ArrayResponse, FarFieldBroadsideIsFlat)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(32, 32, c.wavelength() / 2);
    for (auto model : {DistanceModel::exact, DistanceModel::taylor})
    {
        const auto a = array_response(g, {0.0, 0.0, 1e6}, c, model);
        for (const auto &v : a.entries())
            EXPECT_LT(std::abs(std::arg(v)), 1e-3);
    }
}

TEST(ArrayResponse, UnitModulus)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(32, 32, c.wavelength() / 2);
    for (const auto &p : {SphericalPoint::from_degrees(7, 0, 0.6), SphericalPoint::from_degrees(-25, 10, 0.2)})
        for (const auto &v : array_response(g, p, c).entries())
            EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
}

TEST(ArrayResponse, PhaseMatchesPathDifference)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(4, 4, c.wavelength() / 2);
    const auto p = SphericalPoint::from_degrees(20, -5, 0.3);
    const auto a = array_response(g, p, c);
    for (std::size_t n = 0; n < g.size(); ++n)
    {
        const double phase = -c.wavenumber() * (exact_element_distance(g, n, p) - p.range());
        EXPECT_NEAR(std::abs(a[n] - std::polar(1.0, phase)), 0.0, 1e-12);
    }
}

TEST(ArrayResponse, ConjugateSymmetryOfPairProducts)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(8, 8, c.wavelength() / 2);
    const auto p = SphericalPoint::from_degrees(7, 0, 0.6);
    const auto a1 = array_response(g, p, c);
    const auto a2 = array_response(g, p.with_range(1.3), c);
    Complex s12{}, s21{};
    for (std::size_t n = 0; n < g.size(); ++n)
    {
        s12 += std::conj(a1[n]) * a2[n];
        s21 += std::conj(a2[n]) * a1[n];
    }
    EXPECT_NEAR(std::abs(s12 - std::conj(s21)), 0.0, 1e-12);
}

TEST(FraunhoferDistance, ThirtyTwoSquare)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(32, 32, c.wavelength() / 2);
    const double d_f = fraunhofer_distance(g, c);
    EXPECT_NEAR(d_f, 1024 * c.wavelength(), 1e-12);
    EXPECT_NEAR(d_f, 10.963838464, 1e-8);
    EXPECT_NEAR(d_f, 2 * std::pow(aperture_diagonal(g), 2) / c.wavelength(), 1e-12);
    EXPECT_LT(std::abs(d_f - 10.8) / d_f, 0.03);
}

TEST(FraunhoferDistance, SingleElement)
{
    const CarrierSpec c(28e9);
    EXPECT_NEAR(fraunhofer_distance(build_upa(1, 1, c.wavelength() / 2), c), c.wavelength(), 1e-15);
}

TEST(FraunhoferDistance, RejectsNonSquare)
{
    const CarrierSpec c(28e9);
    EXPECT_THROW(fraunhofer_distance(build_upa(4, 8, 0.005), c), std::invalid_argument);
}

TEST(LosChannel, ScalesResponse)
{
    const CarrierSpec c(28e9);
    const auto g = build_upa(4, 4, c.wavelength() / 2);
    const auto a = array_response(g, SphericalPoint::from_degrees(-25, 0, 1.0), c);

    const auto h1 = los_channel(1.0, a);
    const auto h0 = los_channel(0.0, a);
    const Complex alpha{0.3, -0.4};
    const auto h = los_channel(alpha, a);
    for (std::size_t n = 0; n < a.size(); ++n)
    {
        EXPECT_EQ(h1[n], a[n]);
        EXPECT_EQ(h0[n], Complex(0.0, 0.0));
        EXPECT_NEAR(std::abs(h[n]), 0.5, 1e-12);
        EXPECT_EQ(h[n], alpha * a[n]);
    }
    EXPECT_EQ(h.coefficient(), alpha);
    EXPECT_EQ(h.size(), a.size());
}
