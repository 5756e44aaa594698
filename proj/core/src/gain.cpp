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

#include "risfocus/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace risfocus
{

Complex channel_coefficient(Complex h_s, const LosChannel &h_t, const LosChannel &h_r, const PhaseVector &phases)
{
    if (h_t.size() != h_r.size() || h_t.size() != phases.size())
        throw std::invalid_argument("channel_coefficient: channel and phase lengths differ");
    Complex sum{};
    for (std::size_t n = 0; n < phases.size(); ++n)
        sum += h_r[n] * std::polar(1.0, phases[n]) * h_t[n];
    return h_s + sum;
}

std::vector<Complex> coupling_weights(const ElementGrid &grid, const CarrierSpec &carrier, const SphericalPoint &focal,
                                      const SphericalPoint &eval, DistanceModel model)
{
    const auto a_focal = array_response(grid, focal, carrier, model);
    const auto a_eval = array_response(grid, eval, carrier, model);
    std::vector<Complex> w(grid.size());
    for (std::size_t n = 0; n < w.size(); ++n)
        w[n] = std::conj(a_focal[n]) * a_eval[n];
    return w;
}

double array_gain(std::span<const Complex> weights, std::span<const double> deviations)
{
    if (!deviations.empty() && deviations.size() != weights.size())
        throw std::invalid_argument("array_gain: deviation length differs from N");
    Complex sum{};
    if (deviations.empty())
    {
        for (const auto &w : weights)
            sum += w;
    }
    else
    {
        for (std::size_t n = 0; n < weights.size(); ++n)
            sum += weights[n] * std::polar(1.0, deviations[n]);
    }
    return std::norm(sum);
}

double exact_array_gain(const ElementGrid &grid, const CarrierSpec &carrier, const SphericalPoint &focal,
                        const SphericalPoint &eval, const DeviationVector &deviations, DistanceModel model)
{
    const auto w = coupling_weights(grid, carrier, focal, eval, model);
    return array_gain(w, deviations.values());
}

double avg_channel_gain(std::size_t n, const QuantizerSpec &q, double scale)
{
    if (n == 0)
        throw std::invalid_argument("avg_channel_gain: N must be at least 1");
    const double nn = static_cast<double>(n);
    const double s2 = quantization_efficiency(q);
    return scale * (nn * nn * s2 + nn * (1.0 - s2));
}

} // namespace risfocus
