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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nfgain
{
    struct RadioConfig
    {
        Length wavelength{0.1};
        double p_tx = 1.0;    // source transmit power [W]
        double p_relay = 1.0; // relay transmit power [W]
        double noise = 1.0;   // receiver noise power [W]
        double mu = 1.0;      // IRS amplitude reflection coefficient, (0, 1]

        // Throws DomainError on non-positive powers or mu outside (0, 1].
        void validate() const;

        double tx_snr() const noexcept { return p_tx / noise; }
    };

    // P_tx = base_power / N^exponent
    struct ScalingLaw
    {
        double base_power = 1.0;
        double exponent = 0.0;

        double power_at(double n) const;
    };

    struct NamedGain
    {
        std::string name;
        double value = 0.0;
    };

    struct LinkReport
    {
        double snr = 0.0; // linear
        double se = 0.0;  // bit/s/Hz
        std::vector<NamedGain> gains;
        std::vector<std::string> warnings;
        bool inconsistent = false; // far-field factorization broke its own bound

        // Throws std::out_of_range when no gain with that name was recorded.
        double gain(std::string_view name) const;
    };

    double se_from_snr(double snr);
    double relay_se_from_snr(double snr);

    /// Uplink receiver with MR combining: SNR = xi_{d,eta,N} P_tx / noise.
    LinkReport snr_mmimo(const TerminalPlacement &source, const ArrayGeometry &geometry, const RadioConfig &radio);

    /// Far-field counterpart N * far_field_gain * P_tx / noise. Warns when the rule of thumb fails.
    LinkReport snr_mmimo_ff(const TerminalPlacement &source, const ArrayGeometry &geometry, const RadioConfig &radio);

    /// Two-hop decode-and-forward relay with half pre-log; snr holds the weaker hop.
    LinkReport se_relay(const TerminalPlacement &source, const TerminalPlacement &destination,
                        const ArrayGeometry &geometry, const RadioConfig &radio);

    /// Element-resolved reflecting surface. Without `phases`, uses the co-phasing choice
    /// theta_n = phi_n + psi_n; otherwise evaluates the coherent sum for the supplied phases.
    /// Reported gain "irs" is mu^2 |sum_n |h_n||g_n| exp(j(theta_n - phi_n - psi_n))|^2.
    LinkReport snr_irs(const TerminalPlacement &source, const TerminalPlacement &destination,
                       const ArrayGeometry &geometry, const RadioConfig &radio,
                       std::optional<std::span<const double>> phases = std::nullopt);

    /// Hoelder upper bound xi_{d,eta,N} xi_{delta,omega,N} mu^2 P_tx / noise; any N.
    LinkReport snr_irs_upper(const TerminalPlacement &source, const TerminalPlacement &destination,
                             const ArrayGeometry &geometry, const RadioConfig &radio);

    /// Far-field IRS SNR N^2 s_d s_delta mu^2 P_tx / noise. Gains "reflected_fraction"
    /// (mu^2 N s_delta) and "mmimo_ff_snr" expose the two factors; a reflected fraction above
    /// one marks the report inconsistent.
    LinkReport snr_irs_ff(const TerminalPlacement &source, const TerminalPlacement &destination,
                          const ArrayGeometry &geometry, const RadioConfig &radio);

    using ReportFn = std::function<LinkReport(const ArrayGeometry &, const RadioConfig &)>;

    struct ScalingPoint
    {
        std::int64_t n = 0;
        double p_tx = 0.0;
        double snr = 0.0;
        double se = 0.0;
    };

    /// Evaluates `report` at every N with P_tx = law.base_power / N^law.exponent (and
    /// P_relay following `relay_law` when given). `base` supplies the remaining radio fields.
    std::vector<ScalingPoint> apply_scaling_law(const ReportFn &report, const ArrayGeometry &base_geometry,
                                                const RadioConfig &base, ScalingLaw law,
                                                std::span<const std::int64_t> n_values,
                                                std::optional<ScalingLaw> relay_law = std::nullopt);

    /// Smallest N_IRS whose far-field SE is at least that of an N_mMIMO receiver:
    /// ceil(sqrt(N_mMIMO / (mu^2 s_{delta,omega}))).
    std::int64_t irs_vs_mmimo_elements(std::int64_t n_mmimo, const TerminalPlacement &destination,
                                       const RadioConfig &radio, double element_area);

    /// Smallest N_IRS whose far-field SE is at least that of an N_relay relay:
    /// ceil(sqrt((sqrt(1 + N_relay m) - 1) / k)) with m = min(P_tx s_d, P_relay s_delta)/noise
    /// and k = mu^2 P_tx s_d s_delta / noise.
    std::int64_t irs_vs_relay_elements(std::int64_t n_relay, const TerminalPlacement &source,
                                       const TerminalPlacement &destination, const RadioConfig &radio,
                                       double element_area);

    enum class Setup
    {
        mmimo,
        relay,
        irs
    };

    std::string_view to_string(Setup s) noexcept;

    struct ElementCount
    {
        enum class Status
        {
            found,
            infeasible, // target at or above the asymptotic ceiling
            beyond_cap  // reachable in principle, but not within the search range
        };
        Status status = Status::found;
        std::int64_t n = 0;
        std::string reason;

        bool found() const noexcept { return status == Status::found; }
    };

    /// Smallest N whose exact SE reaches `target_se`, found by monotone bisection.
    ///
    /// mMIMO and relay use the aggregate closed forms and accept any integer N. The IRS uses
    /// the element-resolved optimal-phase sum, so only perfect squares up to
    /// max_resolved_elements are searched. Targets at or above the 1/3 (mMIMO, relay) or 1/9
    /// (IRS) ceiling are reported infeasible.
    ElementCount min_elements_for_se(Setup setup, double target_se, const TerminalPlacement &source,
                                     const std::optional<TerminalPlacement> &destination, const RadioConfig &radio,
                                     double element_area);

    // The asymptotic SE no array size can exceed for the given setup.
    double se_ceiling(Setup setup, const RadioConfig &radio);

    /// True iff the relay's SE exceeds the IRS SE upper bound, assuming the relay's second hop
    /// is the stronger one: mu^2 xi_dst < (sqrt(1 + snr) - 1) / snr.
    bool relay_vs_irs_se_condition(double snr_mmimo, double dst_gain, double mu);
}
