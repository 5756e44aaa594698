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

namespace risfocus
{

/// Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1.
double nsinc(double x) noexcept;

struct FresnelPair
{
    double c = 0.0; // C(x) = int_0^x cos(pi t^2 / 2) dt
    double s = 0.0; // S(x) = int_0^x sin(pi t^2 / 2) dt
};

/// Fresnel integrals; odd in x. Power series for |x| <= 1.5, otherwise the
/// continued fraction of the complementary error function (modified Lentz).
FresnelPair fresnel(double x) noexcept;

/// Depth-defocus loss A(x) = (C^2(sqrt x) + S^2(sqrt x))^2 / x^2, with A(0) = 1
/// and A(-x) = A(x). Takes values in (0, 1].
double depth_loss(double x) noexcept;

/// The x > 0 at which depth_loss(x) = 1/2, found by bisection.
double depth_loss_half_power_point();

/// Reciprocal-distance mismatch delta = 1/d_r - 1/F (1/m).
struct DepthOffset
{
    double delta = 0.0;
};

/// Throws std::invalid_argument for non-positive distances.
DepthOffset depth_offset(double focal_distance, double receiver_distance);

/// Direction-cosine mismatches between focal point and receiver.
struct AngleOffsets
{
    double b = 0.0; // sin(az_F) cos(el_F) - sin(az_r) cos(el_r)
    double c = 0.0; // sin(el_F) - sin(el_r)
};

AngleOffsets angle_offsets(const SphericalPoint &receiver, const SphericalPoint &focal) noexcept;

/// sinc^2(2^-b): the fraction of N^2 kept by a b-bit RIS on average.
double quantization_efficiency(const QuantizerSpec &q) noexcept;

/// N (1 - sinc^2(2^-b)), the incoherent floor common to all average-gain formulas.
double quantization_floor(std::size_t n, const QuantizerSpec &q) noexcept;

/// Coherent part of the depth formula, N^2 sinc^2(2^-b) A(d_F delta / 8).
double depth_focusing_term(std::size_t n, const QuantizerSpec &q, double fraunhofer_distance,
                           DepthOffset offset) noexcept;

/// Average array gain when defocused in distance:
/// N^2 sinc^2(2^-b) A(d_F delta / 8) + N (1 - sinc^2(2^-b)).
double avg_gain_depth(std::size_t n, const QuantizerSpec &q, double fraunhofer_distance, DepthOffset offset);

/// Coherent part of the angular formula,
/// N^2 sinc^2(2^-b) sinc^2(B spacing sqrt(N) / lambda) sinc^2(C spacing sqrt(N) / lambda).
double angular_focusing_term(std::size_t n, const QuantizerSpec &q, double spacing, const CarrierSpec &carrier,
                             AngleOffsets offsets);

/// Average array gain when defocused in angle. N must be a perfect square
/// (std::invalid_argument otherwise).
double avg_gain_angle(std::size_t n, const QuantizerSpec &q, double spacing, const CarrierSpec &carrier,
                      AngleOffsets offsets);

} // namespace risfocus
