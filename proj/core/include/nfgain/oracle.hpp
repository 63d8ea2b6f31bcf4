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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

// Independent ground truth for the closed-form gains: brute-force adaptive quadrature of the
// received power density, plus finite-difference checks of the antiderivatives the closed forms
// are assembled from. Nothing in here calls into propagation.hpp.
namespace nfgain::oracle
{
    // Seed for every randomized oracle suite, so failures can be replayed.
    inline constexpr std::uint64_t default_seed = 0x6e66'6761'696e'2020ULL;

    struct QuadratureSpec
    {
        double relative_tolerance = 1e-10;
        std::int64_t max_subdivisions = std::int64_t{1} << 20;

        // Throws DomainError unless 1e-14 < relative_tolerance < 1e-2 and max_subdivisions >= 1.
        void validate() const;
    };

    struct QuadratureResult
    {
        double value = 0.0;
        double abs_error = 0.0; // estimated
        std::int64_t cells = 0;
    };

    // Received power density at (r_x, r_y, 0) for an isotropic Y-polarized source at
    // `transmitter`: distance loss x projected area x polarization match, per unit area.
    double integrand(const Point3 &transmitter, double r_x, double r_y);

    /// Globally adaptive tensor 7/15-point Gauss-Kronrod cubature of `integrand` over
    /// [x0, x1] x [y0, y1]. The cell with the largest embedded error estimate is quartered
    /// until the summed estimate drops below relative_tolerance * |value|.
    /// Throws ConvergenceError once max_subdivisions cells would be exceeded.
    QuadratureResult integrate_rectangle(const Point3 &transmitter, double x0, double x1, double y0, double y1,
                                         const QuadratureSpec &spec = {});

    struct OracleGain
    {
        Gain gain; // provenance = oracle
        double abs_error = 0.0;
    };

    OracleGain quadrature_gain(const Point3 &transmitter, const Point3 &element_center, Length side,
                               const QuadratureSpec &spec = {});

    // Antiderivatives used to close the double integral, each with its integrand.
    enum class PrimitiveIdentity
    {
        three_halves_power, // 1 / (x^2 + a)^(3/2)
        five_halves_power,  // 1 / (x^2 + a)^(5/2)
        arctangent_kernel   // 1 / ((x^2 + a) sqrt(x^2 + a + b))
    };

    std::string_view to_string(PrimitiveIdentity which) noexcept;

    double primitive(PrimitiveIdentity which, double x, double a, double b = 0.0);
    double primitive_integrand(PrimitiveIdentity which, double x, double a, double b = 0.0);

    // Derivative of the primitive by a fourth-order central difference.
    double primitive_slope(PrimitiveIdentity which, double x, double a, double b = 0.0);

    struct IdentityReport
    {
        PrimitiveIdentity which{};
        int samples = 0;
        double worst_rel_error = 0.0;
        double tolerance = 1e-6;
        bool passed = false;
    };

    /// Draws `samples` points x in [-10, 10], a, b in [1e-2, 1e2] (log-uniform) and compares
    /// primitive_slope with primitive_integrand. With `fixed_b`, b is pinned to that value.
    IdentityReport primitive_identity_check(PrimitiveIdentity which, int samples,
                                            std::uint64_t seed = default_seed, double fixed_b = 0.0);

    // One line of a verification report.
    struct CheckResult
    {
        std::string name;
        double worst_rel_error = 0.0;
        double tolerance = 0.0;
        bool passed = false;
        std::string detail;
    };

    // "name worst_rel_error tolerance pass|fail [detail]" per line.
    void write_report(std::ostream &os, std::span<const CheckResult> checks);
}
