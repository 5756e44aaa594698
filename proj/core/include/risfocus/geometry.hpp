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

#include <cstddef>
#include <span>
#include <vector>

namespace risfocus
{

/// Distance model used for element-to-point path lengths.
/// `exact` is the Euclidean norm; `taylor` is the first-order expansion in the
/// element coordinates, tight near broadside for ranges of a few apertures.
enum class DistanceModel
{
    exact,
    taylor
};

struct CartesianPoint
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Position of an RIS element in the YZ-plane (x = 0), meters.
struct ElementPosition
{
    double y = 0.0;
    double z = 0.0;
};

/// A point given by azimuth, elevation and range as seen from the RIS centre.
/// Angles in radians, range in meters. Construction validates the ranges:
/// azimuth in [-pi, pi], elevation in [-pi/2, pi/2], range > 0.
class SphericalPoint
{
  public:
    SphericalPoint(double azimuth_rad, double elevation_rad, double range_m);

    static SphericalPoint from_degrees(double azimuth_deg, double elevation_deg, double range_m);

    double azimuth() const noexcept { return azimuth_; }
    double elevation() const noexcept { return elevation_; }
    double range() const noexcept { return range_; }

    SphericalPoint with_range(double range_m) const { return {azimuth_, elevation_, range_m}; }
    SphericalPoint with_azimuth(double azimuth_rad) const { return {azimuth_rad, elevation_, range_}; }

    friend bool operator==(const SphericalPoint &, const SphericalPoint &) = default;

  private:
    double azimuth_;
    double elevation_;
    double range_;
};

/// Uniform planar array centred on the origin of the YZ-plane.
///
/// Elements are stored row-major: index n = i * cols + j, where row i runs along z
/// and column j along y. Even counts have no element at the exact origin; the
/// (count - 1) / 2 offset keeps the layout symmetric.
class ElementGrid
{
  public:
    std::size_t size() const noexcept { return positions_.size(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double spacing() const noexcept { return spacing_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    std::span<const ElementPosition> positions() const noexcept { return positions_; }
    const ElementPosition &operator[](std::size_t n) const { return positions_[n]; }
    const ElementPosition &at(std::size_t n) const;

  private:
    friend ElementGrid build_upa(std::size_t rows, std::size_t cols, double spacing);

    ElementGrid(std::vector<ElementPosition> positions, std::size_t rows, std::size_t cols, double spacing)
        : positions_(std::move(positions)), rows_(rows), cols_(cols), spacing_(spacing)
    {
    }

    std::vector<ElementPosition> positions_;
    std::size_t rows_;
    std::size_t cols_;
    double spacing_;
};

/// Builds a rows x cols UPA with the given pitch (meters).
/// Throws std::invalid_argument for zero counts or non-positive spacing.
ElementGrid build_upa(std::size_t rows, std::size_t cols, double spacing);

CartesianPoint spherical_to_cartesian(const SphericalPoint &p) noexcept;

/// Euclidean distance from element n to p. Throws std::out_of_range for n >= N.
double exact_element_distance(const ElementGrid &grid, std::size_t n, const SphericalPoint &p);

/// First-order Taylor approximation d - (sin(az)cos(el) y + sin(el) z) + (y^2 + z^2) / (2d).
double taylor_element_distance(const ElementGrid &grid, std::size_t n, const SphericalPoint &p);

/// Path difference d_n - d for every element, in index order.
/// The exact model uses the cancellation-free form (d_n^2 - d^2) / (d_n + d).
std::vector<double> path_differences(const ElementGrid &grid, const SphericalPoint &p, DistanceModel model);

/// sqrt(2N) * spacing. Requires a square grid (std::invalid_argument otherwise).
double aperture_diagonal(const ElementGrid &grid);

} // namespace risfocus
