// SPDX-License-Identifier: Apache-2.0
//
// nfgain: near-field channel gains for planar arrays and reflecting surfaces
// Copyright (C) 2026 The nfgain Authors
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

#include "nfgain/geometry.hpp"
#include "nfgain/units.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nfgain
{
    struct ElementPosition
    {
        double x = 0.0;
        double y = 0.0;
    };

    /// Center of element n (1-based), numbered left to right, row by row, starting at the
    /// top-left corner of the grid.
    ElementPosition element_coordinates(std::int64_t n, const ArrayGeometry &geometry);

    // Per-element channel h_n = amplitude_n exp(-j phase_n)
    struct ChannelVector
    {
        std::vector<double> amplitudes;
        std::vector<double> phases; // wrapped to [0, 2 pi)
        double wavelength = 0.0;
        std::vector<std::string> warnings;

        std::size_t size() const noexcept { return amplitudes.size(); }
    };

    // 2 pi mod(path_length / wavelength, 1)
    double path_phase(double path_length, double wavelength);

    std::vector<double> unwrap_phases(std::span<const double> wrapped);

    /// Line-of-sight channel between a terminal and every element of the array. Amplitudes
    /// are the square roots of the exact element gains; phases follow the path length to the
    /// element center.
    ///
    /// Requires N to be a perfect square and N <= max_resolved_elements. Adds a warning
    /// (without rejecting) when the terminal is closer than 10 wavelengths to the array plane.
    /// Rows are synthesized in parallel; the result does not depend on the thread count.
    ChannelVector synthesize_channel(const TerminalPlacement &placement, const ArrayGeometry &geometry,
                                     Length wavelength);

    // Columns: n,x_n,y_n,amp,phase
    void write_channel_csv(std::ostream &os, const ChannelVector &channel, const ArrayGeometry &geometry);
}
