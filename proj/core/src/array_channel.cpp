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

#include "nfgain/array_channel.hpp"
#include "nfgain/errors.hpp"
#include "nfgain/parallel.hpp"
#include "nfgain/propagation.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace nfgain
{
    namespace
    {
        constexpr double two_pi = 2.0 * pi;

        // Closer than this many wavelengths to the array plane the isotropic-point model
        // is questionable.
        constexpr double near_plane_wavelengths = 10.0;

        std::string fmt17(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    ElementPosition element_coordinates(std::int64_t n, const ArrayGeometry &geometry)
    {
        const std::int64_t row_len = geometry.elements_per_row();
        if (n < 1 || n > geometry.n_elements())
            throw DomainError("element index " + std::to_string(n) + " outside 1.." +
                              std::to_string(geometry.n_elements()));
        const double side = geometry.element_side();
        const double offset = static_cast<double>(row_len - 1) * side / 2.0;
        const std::int64_t column = (n - 1) % row_len;
        const std::int64_t row = (n - 1) / row_len;
        return {-offset + side * static_cast<double>(column), offset - side * static_cast<double>(row)};
    }

    double path_phase(double path_length, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw DomainError("wavelength must be positive");
        double cycles = std::fmod(path_length / wavelength, 1.0);
        if (cycles < 0.0)
            cycles += 1.0;
        const double phase = two_pi * cycles;
        return phase >= two_pi ? 0.0 : phase;
    }

    std::vector<double> unwrap_phases(std::span<const double> wrapped)
    {
        std::vector<double> out(wrapped.begin(), wrapped.end());
        double shift = 0.0;
        for (std::size_t i = 1; i < out.size(); ++i)
        {
            const double jump = wrapped[i] - wrapped[i - 1];
            if (jump > pi)
                shift -= two_pi;
            else if (jump < -pi)
                shift += two_pi;
            out[i] = wrapped[i] + shift;
        }
        return out;
    }

    ChannelVector synthesize_channel(const TerminalPlacement &placement, const ArrayGeometry &geometry,
                                     Length wavelength)
    {
        geometry.require_resolvable();
        if (!(wavelength.meters() > 0.0))
            throw DomainError("wavelength must be positive");

        const auto n = static_cast<std::size_t>(geometry.n_elements());
        const std::int64_t row_len = geometry.elements_per_row();
        const Point3 tx = placement.position();
        const Length side{geometry.element_side()};
        const double lambda = wavelength.meters();

        ChannelVector channel;
        channel.amplitudes.resize(n);
        channel.phases.resize(n);
        channel.wavelength = lambda;

        if (placement.normal_distance() < near_plane_wavelengths * lambda)
            channel.warnings.push_back("terminal is " + fmt17(placement.normal_distance() / lambda) +
                                       " wavelengths from the array plane; the point-source model assumes far more");

        parallel_for(
            static_cast<std::size_t>(row_len),
            [&](std::size_t first_row, std::size_t last_row)
            {
                for (std::size_t k = first_row * row_len; k < last_row * row_len; ++k)
                {
                    const auto [x, y] = element_coordinates(static_cast<std::int64_t>(k) + 1, geometry);
                    channel.amplitudes[k] = std::sqrt(element_gain(tx, {x, y, 0.0}, side).value);
                    const double dx = x - tx.x;
                    channel.phases[k] = path_phase(std::sqrt(dx * dx + y * y + tx.z * tx.z), lambda);
                }
            },
            8);
        return channel;
    }

    void write_channel_csv(std::ostream &os, const ChannelVector &channel, const ArrayGeometry &geometry)
    {
        os << "n,x_n,y_n,amp,phase\n";
        for (std::size_t k = 0; k < channel.size(); ++k)
        {
            const auto [x, y] = element_coordinates(static_cast<std::int64_t>(k) + 1, geometry);
            os << (k + 1) << ',' << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(channel.amplitudes[k]) << ','
               << fmt17(channel.phases[k]) << '\n';
        }
    }
}
