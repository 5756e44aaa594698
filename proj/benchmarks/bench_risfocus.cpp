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
#include "risfocus/gain.hpp"
#include "risfocus/stochastic.hpp"

#include <benchmark/benchmark.h>

using namespace risfocus;

namespace
{
const CarrierSpec carrier(28e9);
const SphericalPoint tx = SphericalPoint::from_degrees(-25, 0, 1.0);
const SphericalPoint rx = SphericalPoint::from_degrees(7, 0, 0.6);

ElementGrid square(benchmark::State &state)
{
    const auto side = static_cast<std::size_t>(state.range(0));
    return build_upa(side, side, carrier.wavelength() / 2);
}
} // namespace

void BM_Fresnel(benchmark::State &state)
{
    double x = 0.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(fresnel(x));
        x = x < 10.0 ? x + 0.013 : 0.0;
    }
}
BENCHMARK(BM_Fresnel);

void BM_AvgGainDepth(benchmark::State &state)
{
    const QuantizerSpec q(1);
    double delta = -2.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(avg_gain_depth(1024, q, 10.96, {delta}));
        delta = delta < 2.0 ? delta + 0.001 : -2.0;
    }
}
BENCHMARK(BM_AvgGainDepth);

void BM_ExactArrayGain(benchmark::State &state)
{
    const auto grid = square(state);
    const auto zeros = DeviationVector::zeros(grid.size());
    const auto focal = rx.with_range(0.9);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_array_gain(grid, carrier, focal, rx, zeros));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_ExactArrayGain)->Arg(8)->Arg(32)->Arg(64);

void BM_QuantizedLosGain(benchmark::State &state)
{
    const LosScenario s{square(state), carrier, tx, rx.with_range(0.9), rx};
    const QuantizerSpec q(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(quantized_los_gain(s, q));
}
BENCHMARK(BM_QuantizedLosGain)->Arg(32);

void BM_McMeanGain(benchmark::State &state)
{
    const GainScenario s{square(state), carrier, rx.with_range(0.9), rx, DistanceModel::taylor};
    const QuantizerSpec q(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_mean_gain(s, q, 200, 1));
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_McMeanGain)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
