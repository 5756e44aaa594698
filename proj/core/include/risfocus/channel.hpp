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

#include "risfocus/geometry.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace risfocus
{

using Complex = std::complex<double>;

inline constexpr double speed_of_light = 299792458.0; // m/s

class CarrierSpec
{
  public:
    explicit CarrierSpec(double frequency_hz);

    double frequency() const noexcept { return frequency_; }
    double wavelength() const noexcept { return wavelength_; }
    double wavenumber() const noexcept; // 2 pi / lambda

  private:
    double frequency_;
    double wavelength_;
};

/// Near-field array response a(az, el, d): entry n is exp(-j 2pi/lambda (d_n - d)).
class ArrayResponse
{
  public:
    explicit ArrayResponse(std::vector<Complex> entries) : entries_(std::move(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Complex> entries() const noexcept { return entries_; }
    const Complex &operator[](std::size_t n) const { return entries_[n]; }

  private:
    std::vector<Complex> entries_;
};

/// LOS channel h = alpha * a. Entries are formed on access.
class LosChannel
{
  public:
    LosChannel(Complex coefficient, ArrayResponse response)
        : coefficient_(coefficient), response_(std::move(response))
    {
    }

    Complex coefficient() const noexcept { return coefficient_; }
    const ArrayResponse &response() const noexcept { return response_; }
    std::size_t size() const noexcept { return response_.size(); }
    Complex operator[](std::size_t n) const { return coefficient_ * response_[n]; }

  private:
    Complex coefficient_;
    ArrayResponse response_;
};

ArrayResponse array_response(const ElementGrid &grid, const SphericalPoint &p, const CarrierSpec &carrier,
                             DistanceModel model = DistanceModel::exact);

/// 4 N spacing^2 / lambda, which equals 2 D^2 / lambda for the diagonal aperture D.
/// Throws std::invalid_argument for non-square grids.
double fraunhofer_distance(const ElementGrid &grid, const CarrierSpec &carrier);

LosChannel los_channel(Complex alpha, ArrayResponse response);

} // namespace risfocus
