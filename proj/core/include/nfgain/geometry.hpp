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

#include "nfgain/units.hpp"

#include <cstdint>
#include <optional>

namespace nfgain
{
    // Element-resolved operations (per-element channels, optimized IRS sums) refuse larger arrays;
    // the aggregate closed forms serve everything beyond.
    inline constexpr std::int64_t max_resolved_elements = 1'000'000;

    bool is_perfect_square(std::int64_t n) noexcept;

    // Integer square root when n is a perfect square.
    std::optional<std::int64_t> exact_sqrt(std::int64_t n) noexcept;

    // N square elements of area A each, deployed edge-to-edge on a sqrt(N) x sqrt(N) grid
    // centered at the origin of the XY-plane.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(std::int64_t n_elements, double element_area);

        std::int64_t n_elements() const noexcept { return n_; }
        double element_area() const noexcept { return area_; }
        double element_side() const noexcept;
        double total_area() const noexcept { return static_cast<double>(n_) * area_; }

        // Elements per row. Throws DomainError unless N is a perfect square.
        std::int64_t elements_per_row() const;

        // Throws DomainError unless N is a perfect square no larger than max_resolved_elements.
        void require_resolvable() const;

        ArrayGeometry with_elements(std::int64_t n) const { return {n, area_}; }

    private:
        std::int64_t n_;
        double area_;
    };

    // Source or destination located in the XZ-plane at `distance` from the array center.
    class TerminalPlacement
    {
    public:
        TerminalPlacement(Length distance, Angle angle);

        Length distance() const noexcept { return distance_; }
        Angle angle() const noexcept { return angle_; }

        // (d sin(eta), 0, d cos(eta))
        Point3 position() const noexcept;

        // d cos(eta), the distance to the array plane.
        double normal_distance() const noexcept;

    private:
        Length distance_;
        Angle angle_;
    };
}
