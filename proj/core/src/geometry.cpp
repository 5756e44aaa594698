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

#include "risfocus/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risfocus
{

SphericalPoint::SphericalPoint(double azimuth_rad, double elevation_rad, double range_m)
    : azimuth_(azimuth_rad), elevation_(elevation_rad), range_(range_m)
{
    constexpr double pi = std::numbers::pi;
    if (!std::isfinite(azimuth_rad) || azimuth_rad < -pi || azimuth_rad > pi)
        throw std::invalid_argument("azimuth must lie in [-pi, pi], got " + std::to_string(azimuth_rad));
    if (!std::isfinite(elevation_rad) || elevation_rad < -pi / 2 || elevation_rad > pi / 2)
        throw std::invalid_argument("elevation must lie in [-pi/2, pi/2], got " + std::to_string(elevation_rad));
    if (!std::isfinite(range_m) || range_m <= 0.0)
        throw std::invalid_argument("range must be positive, got " + std::to_string(range_m));
}

SphericalPoint SphericalPoint::from_degrees(double azimuth_deg, double elevation_deg, double range_m)
{
    constexpr double deg = std::numbers::pi / 180.0;
    return {azimuth_deg * deg, elevation_deg * deg, range_m};
}

const ElementPosition &ElementGrid::at(std::size_t n) const
{
    if (n >= positions_.size())
        throw std::out_of_range("element index " + std::to_string(n) + " out of range for N=" +
                                std::to_string(positions_.size()));
    return positions_[n];
}

ElementGrid build_upa(std::size_t rows, std::size_t cols, double spacing)
{
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("UPA needs at least one row and one column");
    if (!std::isfinite(spacing) || spacing <= 0.0)
        throw std::invalid_argument("UPA spacing must be positive");

    std::vector<ElementPosition> positions;
    positions.reserve(rows * cols);
    const double y0 = 0.5 * static_cast<double>(cols - 1);
    const double z0 = 0.5 * static_cast<double>(rows - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            positions.push_back({(static_cast<double>(j) - y0) * spacing, (static_cast<double>(i) - z0) * spacing});

    return ElementGrid(std::move(positions), rows, cols, spacing);
}

CartesianPoint spherical_to_cartesian(const SphericalPoint &p) noexcept
{
    const double d = p.range();
    const double cos_el = std::cos(p.elevation());
    return {d * std::cos(p.azimuth()) * cos_el, d * std::sin(p.azimuth()) * cos_el, d * std::sin(p.elevation())};
}

double exact_element_distance(const ElementGrid &grid, std::size_t n, const SphericalPoint &p)
{
    const auto &e = grid.at(n);
    const auto c = spherical_to_cartesian(p);
    const double dy = c.y - e.y;
    const double dz = c.z - e.z;
    return std::sqrt(c.x * c.x + dy * dy + dz * dz);
}

double taylor_element_distance(const ElementGrid &grid, std::size_t n, const SphericalPoint &p)
{
    const auto &e = grid.at(n);
    const double d = p.range();
    const double u = std::sin(p.azimuth()) * std::cos(p.elevation());
    const double v = std::sin(p.elevation());
    return d - (u * e.y + v * e.z) + (e.y * e.y + e.z * e.z) / (2.0 * d);
}

std::vector<double> path_differences(const ElementGrid &grid, const SphericalPoint &p, DistanceModel model)
{
    const double d = p.range();
    const double u = std::sin(p.azimuth()) * std::cos(p.elevation());
    const double v = std::sin(p.elevation());

    std::vector<double> out;
    out.reserve(grid.size());
    for (const auto &e : grid.positions())
    {
        const double linear = u * e.y + v * e.z;
        const double r2 = e.y * e.y + e.z * e.z;
        if (model == DistanceModel::taylor)
        {
            out.push_back(-linear + r2 / (2.0 * d));
        }
        else
        {
            // d_n^2 - d^2 = r2 - 2 d linear
            const double dn = d * std::sqrt(1.0 - 2.0 * linear / d + r2 / (d * d));
            out.push_back((r2 - 2.0 * d * linear) / (dn + d));
        }
    }
    return out;
}

double aperture_diagonal(const ElementGrid &grid)
{
    if (!grid.is_square())
        throw std::invalid_argument("aperture diagonal is defined for square grids only");
    return std::sqrt(2.0 * static_cast<double>(grid.size())) * grid.spacing();
}

} // namespace risfocus
