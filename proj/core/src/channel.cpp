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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risfocus
{

CarrierSpec::CarrierSpec(double frequency_hz) : frequency_(frequency_hz), wavelength_(speed_of_light / frequency_hz)
{
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw std::invalid_argument("carrier frequency must be positive");
}

double CarrierSpec::wavenumber() const noexcept
{
    return 2.0 * std::numbers::pi / wavelength_;
}

ArrayResponse array_response(const ElementGrid &grid, const SphericalPoint &p, const CarrierSpec &carrier,
                             DistanceModel model)
{
    const double k = carrier.wavenumber();
    const auto diffs = path_differences(grid, p, model);

    std::vector<Complex> entries;
    entries.reserve(diffs.size());
    for (double delta : diffs)
        entries.push_back(std::polar(1.0, -k * delta));
    return ArrayResponse(std::move(entries));
}

double fraunhofer_distance(const ElementGrid &grid, const CarrierSpec &carrier)
{
    if (!grid.is_square())
        throw std::invalid_argument("Fraunhofer distance is defined for square grids only");
    const double n = static_cast<double>(grid.size());
    return 4.0 * n * grid.spacing() * grid.spacing() / carrier.wavelength();
}

LosChannel los_channel(Complex alpha, ArrayResponse response)
{
    return {alpha, std::move(response)};
}

} // namespace risfocus
