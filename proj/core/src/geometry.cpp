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

#include "nfgain/geometry.hpp"
#include "nfgain/errors.hpp"

#include <cmath>
#include <string>

namespace nfgain
{
    std::optional<std::int64_t> exact_sqrt(std::int64_t n) noexcept
    {
        if (n < 0)
            return std::nullopt;
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        // llround may land one off for n near 2^63
        while (r > 0 && r > n / r)
            --r;
        while (r + 1 <= n / (r + 1))
            ++r;
        if (r * r != n)
            return std::nullopt;
        return r;
    }

    bool is_perfect_square(std::int64_t n) noexcept
    {
        return n >= 0 && exact_sqrt(n).has_value();
    }

    ArrayGeometry::ArrayGeometry(std::int64_t n_elements, double element_area)
        : n_(n_elements), area_(element_area)
    {
        if (n_elements < 1)
            throw DomainError("array needs at least one element, got " + std::to_string(n_elements));
        if (!std::isfinite(element_area) || element_area <= 0.0)
            throw DomainError("element area must be positive");
    }

    double ArrayGeometry::element_side() const noexcept
    {
        return std::sqrt(area_);
    }

    std::int64_t ArrayGeometry::elements_per_row() const
    {
        auto r = exact_sqrt(n_);
        if (!r)
            throw DomainError("element-resolved geometry needs a perfect-square element count, got " +
                              std::to_string(n_));
        return *r;
    }

    void ArrayGeometry::require_resolvable() const
    {
        elements_per_row();
        if (n_ > max_resolved_elements)
            throw DomainError("element-resolved operations are capped at " + std::to_string(max_resolved_elements) +
                              " elements, got " + std::to_string(n_) + "; use the aggregate gain formulas");
    }

    TerminalPlacement::TerminalPlacement(Length distance, Angle angle) : distance_(distance), angle_(angle)
    {
        if (!(distance.meters() > 0.0))
            throw DomainError("terminal distance must be positive");
        if (!(std::abs(angle.radians()) < pi / 2))
            throw DomainError("terminal angle must satisfy |angle| < pi/2 (source would lie in the array plane)");
    }

    Point3 TerminalPlacement::position() const noexcept
    {
        const double d = distance_.meters();
        const double eta = angle_.radians();
        return {d * std::sin(eta), 0.0, d * std::cos(eta)};
    }

    double TerminalPlacement::normal_distance() const noexcept
    {
        return distance_.meters() * std::cos(angle_.radians());
    }
}
