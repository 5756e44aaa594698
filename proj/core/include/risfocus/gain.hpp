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

#include "risfocus/channel.hpp"
#include "risfocus/geometry.hpp"
#include "risfocus/ris.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace risfocus
{

/// End-to-end coefficient h = h_s + sum_n h_r,n exp(j phi_n) h_t,n.
/// Throws std::invalid_argument on length mismatch.
Complex channel_coefficient(Complex h_s, const LosChannel &h_t, const LosChannel &h_r, const PhaseVector &phases);

/// Per-element coupling conj(a_n(focal)) * a_n(eval). The array gain for a
/// deviation vector is |sum_n w_n exp(j eps_n)|^2.
std::vector<Complex> coupling_weights(const ElementGrid &grid, const CarrierSpec &carrier, const SphericalPoint &focal,
                                      const SphericalPoint &eval, DistanceModel model = DistanceModel::exact);

/// |sum_n w_n exp(j eps_n)|^2; an empty deviation span means all zeros.
double array_gain(std::span<const Complex> weights, std::span<const double> deviations = {});

/// Array gain at `eval` when the RIS is focused on `focal` with quantization
/// deviations applied: |a^H(focal) diag(exp(j eps)) a(eval)|^2, in [0, N^2].
/// Depth studies fix the angles and vary ranges; width studies fix the range.
double exact_array_gain(const ElementGrid &grid, const CarrierSpec &carrier, const SphericalPoint &focal,
                        const SphericalPoint &eval, const DeviationVector &deviations,
                        DistanceModel model = DistanceModel::exact);

/// Average channel gain under uniform deviations:
/// scale * (N^2 sinc^2(2^-b) + N (1 - sinc^2(2^-b))).
double avg_channel_gain(std::size_t n, const QuantizerSpec &q, double scale = 1.0);

} // namespace risfocus
