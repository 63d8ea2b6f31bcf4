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

namespace nfgain
{
    // Limit of every planar-aperture gain as the aperture covers the whole plane.
    inline constexpr double planar_gain_limit = 1.0 / 3.0;

    /// Friis gain of an antenna with effective area `area` [m^2] perpendicular to the
    /// propagation direction: area / (4 pi d^2). Throws DomainError for d = 0 or area <= 0.
    Gain free_space_gain(double area, Length distance);

    /// Exact gain from an isotropic, Y-polarized transmitter at `transmitter` (z > 0) to a
    /// side x side square receive area centered at `element_center` (z = 0) in the XY-plane.
    ///
    /// Accounts for the per-point distance, the projected effective area and the polarization
    /// mismatch across the square. The closed-form primitive is evaluated in extended precision
    /// since small elements far from the transmitter's foot point make the four corner terms
    /// nearly cancel.
    Gain element_gain(const Point3 &transmitter, const Point3 &element_center, Length side);

    /// Total gain of a square aperture of `total_area` with the transmitter on its normal
    /// through the center, at `distance`. Tends to 1/3 as the aperture grows.
    Gain boresight_array_gain(Length distance, double total_area);

    /// Total gain of a square aperture of `total_area` centered at the origin, with the
    /// transmitter at `distance` in direction `angle` (|angle| < pi/2). Even in `angle`;
    /// identical to boresight_array_gain for angle = 0.
    ///
    /// Depends on the array only through `total_area`. For apertures so large that
    /// B = total_area / (4 d^2 cos^2) exceeds 1e12 the asymptotic expansion
    /// 1/3 - 1/(pi sqrt(2B)) is returned.
    Gain offaxis_array_gain(Length distance, Angle angle, double total_area);

    /// Far-field per-element gain area cos(angle) / (4 pi d^2).
    Gain far_field_gain(double area, Length distance, Angle angle);

    /// Rule of thumb for the far-field regime: total_area <= (d cos(angle))^2 / 10.
    bool far_field_valid(double total_area, Length distance, Angle angle);

    /// Gain a specular (mirror-like) reflector converges to: area / (4 pi (d + delta)^2).
    Gain mirror_limit_gain(Length source_distance, Length destination_distance, double element_area);

    /// Largest aperture a mirror-mimicking surface exploits when source and destination are
    /// centered in front of it: wavelength / (1/d + 1/delta).
    double mirror_max_area(Length source_distance, Length destination_distance, Length wavelength);
}
