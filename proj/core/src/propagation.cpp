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

#include "nfgain/propagation.hpp"
#include "nfgain/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace nfgain
{
    namespace
    {
        // Beyond this aperture-to-distance ratio the arctangents sit within 1e-6 of pi/2 and
        // the leading-order expansion is exact to double precision.
        constexpr double asymptotic_ratio = 1e12;

        double require_positive_distance(Length d, const char *what)
        {
            if (!(d.meters() > 0.0))
                throw DomainError(std::string(what) + " must be positive");
            return d.meters();
        }

        void require_off_plane(Angle angle)
        {
            if (!(std::abs(angle.radians()) < pi / 2))
                throw DomainError("|angle| must be below pi/2; the terminal would lie in the array plane");
        }

        void require_positive_area(double area)
        {
            if (!std::isfinite(area) || !(area > 0.0))
                throw DomainError("area must be positive and finite");
        }

        double large_aperture_expansion(double ratio)
        {
            return planar_gain_limit - 1.0 / (pi * std::sqrt(2.0 * ratio));
        }

        // Antiderivative of the received power density, in units normalized by the distance
        // to the plane. u, v are the corner offsets divided by that distance.
        long double corner_term(long double u, long double v)
        {
            const long double p = u * v;
            const long double r = std::sqrt(u * u + v * v + 1.0L);
            return p / (3.0L * (v * v + 1.0L) * r) + (2.0L / 3.0L) * std::atan(p / r);
        }
    }

    Gain free_space_gain(double area, Length distance)
    {
        require_positive_area(area);
        const double d = require_positive_distance(distance, "distance");
        return {area / (4.0 * pi * d * d), Provenance::exact};
    }

    Gain element_gain(const Point3 &transmitter, const Point3 &element_center, Length side)
    {
        if (!(transmitter.z > 0.0))
            throw DomainError("transmitter must be strictly in front of the array plane (z > 0)");
        if (element_center.z != 0.0)
            throw DomainError("element center must lie in the array plane (z = 0)");
        const double a = require_positive_distance(side, "element side");

        const long double d = transmitter.z;
        const long double dx = static_cast<long double>(element_center.x) - transmitter.x;
        const long double dy = static_cast<long double>(element_center.y) - transmitter.y;
        const long double half = 0.5L * a;
        const std::array<long double, 2> xs{(half + dx) / d, (half - dx) / d};
        const std::array<long double, 2> ys{(half + dy) / d, (half - dy) / d};

        long double sum = 0.0L;
        for (long double u : xs)
            for (long double v : ys)
                sum += corner_term(u, v);

        return {static_cast<double>(sum / (4.0L * std::numbers::pi_v<long double>)), Provenance::exact};
    }

    Gain boresight_array_gain(Length distance, double total_area)
    {
        require_positive_area(total_area);
        const double d = require_positive_distance(distance, "distance");

        // s = N beta_d pi
        const double s = total_area / (4.0 * d * d);
        if (s > asymptotic_ratio)
            return {large_aperture_expansion(s), Provenance::exact};

        const double root = std::sqrt(2.0 * s + 1.0);
        const double value = s / (3.0 * pi * (s + 1.0) * root) + 2.0 / (3.0 * pi) * std::atan(s / root);
        return {value, Provenance::exact};
    }

    Gain offaxis_array_gain(Length distance, Angle angle, double total_area)
    {
        require_positive_area(total_area);
        const double d = require_positive_distance(distance, "distance");
        require_off_plane(angle);

        const double c = std::cos(angle.radians());
        const double b = total_area / (4.0 * d * d * c * c);
        if (b > asymptotic_ratio)
            return {large_aperture_expansion(b), Provenance::exact};

        const double t = std::tan(angle.radians());
        const double root_b = std::sqrt(b);
        double value = 0.0;
        for (double sign : {-1.0, 1.0})
        {
            const double shifted = root_b + sign * t;
            // 2B + tan^2 + 1 + 2 sign sqrt(B) tan, regrouped so that no terms cancel
            const double radicand = b + 1.0 + shifted * shifted;
            const double root = std::sqrt(radicand);
            const double numerator = root_b * shifted;
            value += numerator / (6.0 * pi * (b + 1.0) * root) + std::atan(numerator / root) / (3.0 * pi);
        }
        return {value, Provenance::exact};
    }

    Gain far_field_gain(double area, Length distance, Angle angle)
    {
        require_positive_area(area);
        const double d = require_positive_distance(distance, "distance");
        require_off_plane(angle);
        return {area * std::cos(angle.radians()) / (4.0 * pi * d * d), Provenance::far_field};
    }

    bool far_field_valid(double total_area, Length distance, Angle angle)
    {
        const double d = require_positive_distance(distance, "distance");
        const double normal = d * std::cos(angle.radians());
        return total_area <= normal * normal / 10.0;
    }

    Gain mirror_limit_gain(Length source_distance, Length destination_distance, double element_area)
    {
        require_positive_area(element_area);
        const double d = require_positive_distance(source_distance, "source distance");
        const double total = d + destination_distance.meters();
        return {element_area / (4.0 * pi * total * total), Provenance::mirror_limit};
    }

    double mirror_max_area(Length source_distance, Length destination_distance, Length wavelength)
    {
        const double d = require_positive_distance(source_distance, "source distance");
        const double delta = require_positive_distance(destination_distance, "destination distance");
        const double lambda = require_positive_distance(wavelength, "wavelength");
        return lambda / (1.0 / d + 1.0 / delta);
    }
}
