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

#include "risfocus/closedform.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace risfocus
{

namespace
{
constexpr double pi = std::numbers::pi;
constexpr double small_argument = 1e-8;

FresnelPair fresnel_series(double x) noexcept
{
    // t_m = x (pi x^2 / 2)^m / m!; even m feed C, odd m feed S, each divided by 2m + 1.
    const double g = 0.5 * pi * x * x;
    double term = x;
    double c = x;
    double s = 0.0;
    for (int m = 1; m < 200; ++m)
    {
        term *= g / m;
        const double contrib = term / (2 * m + 1);
        const bool negative = (m % 4 == 2) || (m % 4 == 3);
        if (m % 2 == 0)
            c += negative ? -contrib : contrib;
        else
            s += negative ? -contrib : contrib;
        if (contrib < std::numeric_limits<double>::epsilon() * 1e-2 * std::abs(c))
            break;
    }
    return {c, s};
}

FresnelPair fresnel_continued_fraction(double x) noexcept
{
    using cplx = std::complex<double>;
    constexpr double tiny = 1e-300;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const double px2 = pi * x * x;
    cplx b(1.0, -px2);
    cplx c(1.0 / tiny, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    int n = -1;
    for (int k = 2; k < 100000; ++k)
    {
        n += 2;
        const double a = -static_cast<double>(n) * (n + 1);
        b += 4.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
            break;
    }
    h *= cplx(x, -x);
    const cplx cs = cplx(0.5, 0.5) * (1.0 - std::polar(1.0, 0.5 * px2) * h);
    return {cs.real(), cs.imag()};
}
} // namespace

double nsinc(double x) noexcept
{
    if (std::abs(x) < small_argument)
    {
        const double px = pi * x;
        return 1.0 - px * px / 6.0;
    }
    return std::sin(pi * x) / (pi * x);
}

FresnelPair fresnel(double x) noexcept
{
    const double ax = std::abs(x);
    FresnelPair r = ax <= 1.5 ? fresnel_series(ax) : fresnel_continued_fraction(ax);
    if (x < 0.0)
    {
        r.c = -r.c;
        r.s = -r.s;
    }
    return r;
}

double depth_loss(double x) noexcept
{
    const double ax = std::abs(x);
    if (ax < small_argument)
        return 1.0 - 2.0 * pi * pi * ax * ax / 45.0;
    const auto [c, s] = fresnel(std::sqrt(ax));
    const double ratio = (c * c + s * s) / ax;
    return ratio * ratio;
}

double depth_loss_half_power_point()
{
    double lo = 0.5;
    double hi = 2.0;
    if (!(depth_loss(lo) > 0.5 && depth_loss(hi) < 0.5))
        throw std::logic_error("depth_loss half-power point is not bracketed");
    while (hi - lo > 1e-14)
    {
        const double mid = 0.5 * (lo + hi);
        (depth_loss(mid) > 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

DepthOffset depth_offset(double focal_distance, double receiver_distance)
{
    if (!(focal_distance > 0.0) || !(receiver_distance > 0.0))
        throw std::invalid_argument("depth_offset: distances must be positive");
    return {1.0 / receiver_distance - 1.0 / focal_distance};
}

AngleOffsets angle_offsets(const SphericalPoint &receiver, const SphericalPoint &focal) noexcept
{
    const double b = std::sin(focal.azimuth()) * std::cos(focal.elevation()) -
                     std::sin(receiver.azimuth()) * std::cos(receiver.elevation());
    const double c = std::sin(focal.elevation()) - std::sin(receiver.elevation());
    return {b, c};
}

double quantization_efficiency(const QuantizerSpec &q) noexcept
{
    const double s = nsinc(std::ldexp(1.0, -q.bits()));
    return s * s;
}

double quantization_floor(std::size_t n, const QuantizerSpec &q) noexcept
{
    return static_cast<double>(n) * (1.0 - quantization_efficiency(q));
}

double depth_focusing_term(std::size_t n, const QuantizerSpec &q, double fraunhofer_distance,
                           DepthOffset offset) noexcept
{
    const double nn = static_cast<double>(n);
    return nn * nn * quantization_efficiency(q) * depth_loss(fraunhofer_distance * offset.delta / 8.0);
}

double avg_gain_depth(std::size_t n, const QuantizerSpec &q, double fraunhofer_distance, DepthOffset offset)
{
    if (n == 0)
        throw std::invalid_argument("avg_gain_depth: N must be at least 1");
    if (!(fraunhofer_distance > 0.0))
        throw std::invalid_argument("avg_gain_depth: Fraunhofer distance must be positive");
    return depth_focusing_term(n, q, fraunhofer_distance, offset) + quantization_floor(n, q);
}

namespace
{
double side_length(std::size_t n)
{
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (n == 0 || side * side != n)
        throw std::invalid_argument("angular gain formula needs a square element count");
    return static_cast<double>(side);
}
} // namespace

double angular_focusing_term(std::size_t n, const QuantizerSpec &q, double spacing, const CarrierSpec &carrier,
                             AngleOffsets offsets)
{
    const double aperture_in_wavelengths = spacing * side_length(n) / carrier.wavelength();
    const double sb = nsinc(offsets.b * aperture_in_wavelengths);
    const double sc = nsinc(offsets.c * aperture_in_wavelengths);
    const double nn = static_cast<double>(n);
    return nn * nn * quantization_efficiency(q) * sb * sb * sc * sc;
}

double avg_gain_angle(std::size_t n, const QuantizerSpec &q, double spacing, const CarrierSpec &carrier,
                      AngleOffsets offsets)
{
    return angular_focusing_term(n, q, spacing, carrier, offsets) + quantization_floor(n, q);
}

} // namespace risfocus
