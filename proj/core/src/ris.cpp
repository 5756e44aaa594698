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

#include "risfocus/ris.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risfocus
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double wrap_two_pi(double phase) noexcept
{
    double w = std::fmod(phase, two_pi);
    if (w < 0.0)
        w += two_pi;
    if (w >= two_pi)
        w = 0.0;
    return w;
}

double wrap_pi(double phase) noexcept
{
    double w = wrap_two_pi(phase + std::numbers::pi) - std::numbers::pi;
    return w;
}

PhaseVector::PhaseVector(std::vector<double> phases) : phases_(std::move(phases))
{
    for (auto &p : phases_)
        p = wrap_two_pi(p);
}

QuantizerSpec::QuantizerSpec(int bits) : bits_(bits)
{
    if (bits < 1 || bits > 62)
        throw std::invalid_argument("quantizer bits must lie in [1, 62], got " + std::to_string(bits));
}

double QuantizerSpec::step() const noexcept
{
    return two_pi / static_cast<double>(level_count());
}

double QuantizerSpec::max_deviation() const noexcept
{
    return std::numbers::pi / static_cast<double>(level_count());
}

PhaseVector ideal_phases(const LosChannel &h_t, const LosChannel &h_r, Complex h_s)
{
    if (h_t.size() != h_r.size())
        throw std::invalid_argument("transmit and receive channels differ in length");

    const double static_arg = (h_s == Complex{}) ? 0.0 : std::arg(h_s);
    std::vector<double> phases(h_t.size());
    for (std::size_t n = 0; n < phases.size(); ++n)
        phases[n] = static_arg - std::arg(h_r[n] * h_t[n]);
    return PhaseVector(std::move(phases));
}

PhaseVector focus_phases(const ElementGrid &grid, const SphericalPoint &tx, const SphericalPoint &focal,
                         const CarrierSpec &carrier, DistanceModel model)
{
    const auto a_tx = array_response(grid, tx, carrier, model);
    const auto a_focal = array_response(grid, focal, carrier, model);
    std::vector<double> phases(grid.size());
    for (std::size_t n = 0; n < phases.size(); ++n)
        phases[n] = -(std::arg(a_tx[n]) + std::arg(a_focal[n]));
    return PhaseVector(std::move(phases));
}

QuantizedPhases quantize(const PhaseVector &phases, const QuantizerSpec &q)
{
    const double step = q.step();
    const double levels = static_cast<double>(q.level_count());

    std::vector<double> out(phases.size());
    std::vector<double> dev(phases.size());
    for (std::size_t n = 0; n < phases.size(); ++n)
    {
        const double t = phases[n] / step; // in [0, levels)
        const double lo = std::floor(t);
        const double frac = t - lo;
        double k = lo;
        if (frac > 0.5)
            k = lo + 1.0;
        else if (frac == 0.5 && lo + 1.0 == levels)
            k = levels; // tie across the wrap: level 0 is the lower index
        dev[n] = (k - t) * step;
        out[n] = (k >= levels ? k - levels : k) * step;
    }
    return {PhaseVector(std::move(out)), DeviationVector(std::move(dev))};
}

std::vector<double> phase_set(const QuantizerSpec &q)
{
    if (q.bits() > 24)
        throw std::length_error("phase_set: 2^" + std::to_string(q.bits()) + " levels is too many to enumerate");
    std::vector<double> levels(q.level_count());
    for (std::size_t k = 0; k < levels.size(); ++k)
        levels[k] = static_cast<double>(k) * q.step();
    return levels;
}

} // namespace risfocus
