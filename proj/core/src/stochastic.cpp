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

#include "risfocus/stochastic.hpp"

#include "risfocus/gain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace risfocus
{

namespace
{
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double deviation_draw(const CounterRng &rng, double bound, std::uint64_t trial, std::uint64_t index) noexcept
{
    return (2.0 * rng.uniform(trial, index) - 1.0) * bound;
}
} // namespace

std::uint64_t CounterRng::bits(std::uint64_t trial, std::uint64_t index) const noexcept
{
    const std::uint64_t key = splitmix64(splitmix64(seed_) ^ trial);
    return splitmix64(key ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL));
}

double CounterRng::uniform(std::uint64_t trial, std::uint64_t index) const noexcept
{
    return static_cast<double>(bits(trial, index) >> 11) * 0x1.0p-53;
}

DeviationVector sample_deviations(std::size_t n, const QuantizerSpec &q, std::uint64_t seed, std::uint64_t trial)
{
    const CounterRng rng(seed);
    const double bound = q.max_deviation();
    std::vector<double> eps(n);
    for (std::size_t i = 0; i < n; ++i)
        eps[i] = deviation_draw(rng, bound, trial, i);
    return DeviationVector(std::move(eps));
}

McResult mc_mean_gain(const GainScenario &scenario, const QuantizerSpec &q, std::size_t trials, std::uint64_t seed)
{
    if (trials < 2)
        throw std::invalid_argument("mc_mean_gain needs at least two trials");

    const auto weights = coupling_weights(scenario.grid, scenario.carrier, scenario.focal, scenario.eval,
                                          scenario.model);
    const CounterRng rng(seed);
    const double bound = q.max_deviation();
    std::vector<double> gains(trials);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
        {
            Complex sum{};
            for (std::size_t i = 0; i < weights.size(); ++i)
                sum += weights[i] * std::polar(1.0, deviation_draw(rng, bound, t, i));
            gains[t] = std::norm(sum);
        }
    };

    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, trials / 64));
    if (workers == 1)
    {
        run_range(0, trials);
    }
    else
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(trials, begin + chunk);
            if (begin < end)
                pool.emplace_back(run_range, begin, end);
        }
    }

    double sum = 0.0;
    for (double g : gains)
        sum += g;
    const double mean = sum / static_cast<double>(trials);
    double ss = 0.0;
    for (double g : gains)
        ss += (g - mean) * (g - mean);
    const double variance = ss / static_cast<double>(trials - 1);
    return {mean, std::sqrt(variance / static_cast<double>(trials)), trials, seed};
}

double quantized_los_gain(const LosScenario &scenario, const QuantizerSpec &q)
{
    const auto &s = scenario;
    const auto ideal = focus_phases(s.grid, s.tx, s.focal, s.carrier, s.model);
    const auto quantized = quantize(ideal, q);
    const auto h_t = los_channel(1.0, array_response(s.grid, s.tx, s.carrier, s.model));
    const auto h_r = los_channel(1.0, array_response(s.grid, s.eval, s.carrier, s.model));
    return std::norm(channel_coefficient({}, h_t, h_r, quantized.phases));
}

} // namespace risfocus
