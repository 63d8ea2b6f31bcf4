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

#include <numbers>
#include <string_view>

namespace nfgain
{
    inline constexpr double pi = std::numbers::pi;

    // Speed of light in vacuum [m/s]
    inline constexpr double speed_of_light = 299792458.0;

    // Distance, wavelength or side length in meters. Never negative.
    class Length
    {
    public:
        constexpr Length() = default;
        explicit Length(double meters);

        constexpr double meters() const noexcept { return value_; }

        friend constexpr bool operator==(Length, Length) = default;

    private:
        double value_ = 0.0;
    };

    // Angle in radians, measured from the array normal in the XZ-plane (positive toward +X).
    class Angle
    {
    public:
        constexpr Angle() = default;
        explicit Angle(double radians);

        constexpr double radians() const noexcept { return value_; }

        friend constexpr bool operator==(Angle, Angle) = default;

    private:
        double value_ = 0.0;
    };

    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
    };

    enum class Provenance
    {
        exact,
        far_field,
        oracle,
        upper_bound,
        mirror_limit
    };

    std::string_view to_string(Provenance p) noexcept;

    // Dimensionless power ratio between received and transmitted power.
    struct Gain
    {
        double value = 0.0;
        Provenance provenance = Provenance::exact;
    };

    // 10 log10(x). Formatting helper only, all arithmetic stays linear.
    double to_db(double linear);
    double from_db(double db);

    double wavelength_from_frequency(double frequency_hz);
}
