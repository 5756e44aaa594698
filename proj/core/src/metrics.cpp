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

#include "risfocus/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risfocus
{

GainCurve::GainCurve(std::vector<double> axis, std::vector<double> values, AxisKind kind)
    : axis_(std::move(axis)), values_(std::move(values)), kind_(kind)
{
    if (axis_.size() != values_.size())
        throw std::invalid_argument("GainCurve: axis and values differ in length");
    if (axis_.size() < 2)
        throw std::invalid_argument("GainCurve: need at least two samples");
    for (std::size_t i = 1; i < axis_.size(); ++i)
        if (!(axis_[i] > axis_[i - 1]))
            throw std::invalid_argument("GainCurve: axis must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("GainCurve: values must be finite and non-negative");
}

std::optional<double> HalfPowerInterval::width() const noexcept
{
    if (!bounded())
        return std::nullopt;
    return *upper - *lower;
}

GainCurve normalize_peak(const GainCurve &curve)
{
    const auto v = curve.values();
    const double peak = *std::max_element(v.begin(), v.end());
    if (!(peak > 0.0))
        throw std::invalid_argument("normalize_peak: curve is identically zero");
    std::vector<double> out(v.begin(), v.end());
    for (auto &x : out)
        x /= peak;
    return {std::vector<double>(curve.axis().begin(), curve.axis().end()), std::move(out), curve.kind()};
}

namespace
{
std::size_t peak_index(const GainCurve &curve)
{
    const auto v = curve.values();
    // max_element returns the first maximum, i.e. the smallest axis value.
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

double crossing(double x0, double y0, double x1, double y1, double level)
{
    return x0 + (level - y0) * (x1 - x0) / (y1 - y0);
}
} // namespace

double peak_location(const GainCurve &curve)
{
    return curve.axis()[peak_index(curve)];
}

HalfPowerInterval half_power_interval(const GainCurve &curve)
{
    const auto x = curve.axis();
    const auto y = curve.values();
    const std::size_t ip = peak_index(curve);
    const double level = 0.5 * y[ip];

    HalfPowerInterval out;
    out.peak = x[ip];

    std::size_t i = ip;
    while (i > 0 && y[i - 1] >= level)
        --i;
    if (i > 0)
        out.lower = crossing(x[i - 1], y[i - 1], x[i], y[i], level);

    std::size_t j = ip;
    while (j + 1 < y.size() && y[j + 1] >= level)
        ++j;
    if (j + 1 < y.size())
        out.upper = crossing(x[j], y[j], x[j + 1], y[j + 1], level);

    return out;
}

GainCurve moving_average(const GainCurve &curve, std::size_t window)
{
    if (window == 0 || window % 2 == 0)
        throw std::invalid_argument("moving_average: window must be odd");
    const auto v = curve.values();
    const std::size_t half = window / 2;
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(v.size() - 1, i + half);
        double sum = 0.0;
        for (std::size_t k = lo; k <= hi; ++k)
            sum += v[k];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return {std::vector<double>(curve.axis().begin(), curve.axis().end()), std::move(out), curve.kind()};
}

} // namespace risfocus
