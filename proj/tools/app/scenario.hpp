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
#include "nfgain/link.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfgain::app
{
    // One curve family a scenario can emit.
    enum class SetupKind
    {
        mmimo,        // exact receiver gain
        mmimo_ff,     // far-field receiver gain
        relay,        // exact two-hop relay
        relay_ff,     // far-field two-hop relay
        irs_exact,    // reflecting surface, co-phased, element-resolved
        irs_mirror,   // reflecting surface, all phase shifts zero, element-resolved
        irs_ff,       // reflecting surface, far-field N^2 law
        irs_upper,    // reflecting surface, product-of-gains bound
        mirror_limit, // specular-reflector limit, independent of N
    };

    std::string_view to_string(SetupKind kind) noexcept;
    std::optional<SetupKind> parse_setup(std::string_view name) noexcept;
    bool needs_destination(SetupKind kind) noexcept;
    bool element_resolved(SetupKind kind) noexcept;

    struct PlacementSpec
    {
        double distance_m = 1.0;
        double angle_rad = 0.0;

        TerminalPlacement placement() const { return {Length{distance_m}, Angle{angle_rad}}; }
        bool operator==(const PlacementSpec &) const = default;
    };

    struct LogGrid
    {
        double log10_min = 0.0;
        double log10_max = 8.0;
        int points_per_decade = 10;
        bool perfect_squares = false;

        bool operator==(const LogGrid &) const = default;
    };

    // Either an explicit list or a log-spaced range; exactly one is set after validation.
    struct GridSpec
    {
        std::vector<std::int64_t> values;
        std::optional<LogGrid> log;

        std::vector<std::int64_t> expand() const;
        bool operator==(const GridSpec &) const = default;
    };

    enum class Calibration
    {
        none,
        unit_snr_at_n1, // P/noise chosen so that the source-hop SNR is 0 dB with a single element
    };

    struct Scenario
    {
        std::string name;
        std::vector<SetupKind> setups;

        std::optional<double> wavelength_m;
        std::optional<double> frequency_hz;
        std::optional<double> element_area_m2; // unset: isotropic element, wavelength^2 / (4 pi)

        double tx_power_w = 1.0;
        std::optional<double> relay_power_w; // unset: equal to the source power
        double noise_power_w = 1.0;
        double mu = 1.0;
        std::optional<double> snr_reference_db; // P_tx / noise in dB, overrides tx_power_w
        Calibration calibration = Calibration::none;

        PlacementSpec source;
        std::optional<PlacementSpec> destination;

        std::optional<double> scaling_base_power_w;
        std::vector<double> scaling_exponents; // empty: constant power

        GridSpec n_grid;

        double wavelength() const;
        double element_area() const;

        bool operator==(const Scenario &) const = default;
    };

    // Throws ValidationError listing every offending field.
    void validate(const Scenario &scenario);

    // key = value lines, '#' starts a comment. Throws ValidationError with field paths.
    Scenario parse_scenario(std::string_view text);

    // Inverse of parse_scenario: parse_scenario(serialize(s)) == s for every valid s.
    std::string serialize(const Scenario &scenario);

    std::vector<std::string> builtin_names();
    std::string builtin_text(std::string_view name);

    // "builtin:NAME" or a path to a scenario file.
    Scenario load_scenario(const std::string &reference);

    // Accepts a plain number of radians or multiples of pi such as "pi/6", "-pi/6", "2*pi/3".
    std::optional<double> parse_angle(std::string_view text) noexcept;
}
