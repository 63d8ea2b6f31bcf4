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

#include "nfgain/link.hpp"
#include "nfgain/array_channel.hpp"
#include "nfgain/errors.hpp"
#include "nfgain/propagation.hpp"

#include "detail/compensated_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nfgain
{
    namespace
    {
        // Upper end of the bisection for the aggregate closed forms.
        constexpr std::int64_t aggregate_search_cap = std::int64_t{1} << 62;

        // An SE this close below the target counts as reaching it, so that a calibrated
        // checkpoint is not missed by one rounding step.
        constexpr double se_slack = 1e-12;

        bool meets(double se, double target) { return se >= target * (1.0 - se_slack); }

        double offaxis(const TerminalPlacement &p, const ArrayGeometry &g)
        {
            return offaxis_array_gain(p.distance(), p.angle(), g.total_area()).value;
        }

        double far_field(const TerminalPlacement &p, double element_area)
        {
            return far_field_gain(element_area, p.distance(), p.angle()).value;
        }

        void warn_if_near(LinkReport &report, const TerminalPlacement &p, const ArrayGeometry &g, const char *hop)
        {
            if (!far_field_valid(g.total_area(), p.distance(), p.angle()))
                report.warnings.push_back(std::string(hop) +
                                          " hop violates the far-field rule of thumb; the approximation overestimates");
        }

        // sqrt(1 + x) - 1 without cancellation for small x
        double sqrt1p_minus_one(double x) { return x / (std::sqrt(1.0 + x) + 1.0); }

        // Smallest n in [lo, hi] with reached(n), given reached is monotone and reached(hi).
        template <class Pred>
        std::int64_t bisect(std::int64_t lo, std::int64_t hi, Pred reached)
        {
            while (lo < hi)
            {
                const std::int64_t mid = lo + (hi - lo) / 2;
                if (reached(mid))
                    hi = mid;
                else
                    lo = mid + 1;
            }
            return lo;
        }
    }

    void RadioConfig::validate() const
    {
        auto positive = [](double v, const char *name)
        {
            if (!std::isfinite(v) || !(v > 0.0))
                throw DomainError(std::string(name) + " must be positive and finite");
        };
        positive(wavelength.meters(), "wavelength");
        positive(p_tx, "p_tx");
        positive(p_relay, "p_relay");
        positive(noise, "noise");
        if (!(mu > 0.0 && mu <= 1.0))
            throw DomainError("mu must lie in (0, 1]");
    }

    double ScalingLaw::power_at(double n) const
    {
        if (!(exponent >= 0.0) || !std::isfinite(exponent))
            throw DomainError("scaling exponent must be nonnegative");
        if (!(base_power > 0.0))
            throw DomainError("scaling base power must be positive");
        if (!(n >= 1.0))
            throw DomainError("scaling law needs N >= 1");
        return base_power / std::pow(n, exponent);
    }

    double LinkReport::gain(std::string_view name) const
    {
        for (const auto &g : gains)
            if (g.name == name)
                return g.value;
        throw std::out_of_range("no gain named '" + std::string(name) + "' in report");
    }

    double se_from_snr(double snr) { return std::log2(1.0 + snr); }
    double relay_se_from_snr(double snr) { return 0.5 * std::log2(1.0 + snr); }

    LinkReport snr_mmimo(const TerminalPlacement &source, const ArrayGeometry &geometry, const RadioConfig &radio)
    {
        radio.validate();
        LinkReport r;
        const double xi = offaxis(source, geometry);
        r.snr = xi * radio.tx_snr();
        r.se = se_from_snr(r.snr);
        r.gains = {{"xi_src", xi}};
        return r;
    }

    LinkReport snr_mmimo_ff(const TerminalPlacement &source, const ArrayGeometry &geometry, const RadioConfig &radio)
    {
        radio.validate();
        LinkReport r;
        const double s = far_field(source, geometry.element_area());
        const double total = static_cast<double>(geometry.n_elements()) * s;
        r.snr = total * radio.tx_snr();
        r.se = se_from_snr(r.snr);
        r.gains = {{"ff_element_src", s}, {"ff_total_src", total}};
        warn_if_near(r, source, geometry, "source");
        return r;
    }

    LinkReport se_relay(const TerminalPlacement &source, const TerminalPlacement &destination,
                        const ArrayGeometry &geometry, const RadioConfig &radio)
    {
        radio.validate();
        LinkReport r;
        const double xi_src = offaxis(source, geometry);
        const double xi_dst = offaxis(destination, geometry);
        r.snr = std::min(xi_src * radio.p_tx, xi_dst * radio.p_relay) / radio.noise;
        r.se = relay_se_from_snr(r.snr);
        r.gains = {{"xi_src", xi_src}, {"xi_dst", xi_dst}};
        return r;
    }

    LinkReport snr_irs(const TerminalPlacement &source, const TerminalPlacement &destination,
                       const ArrayGeometry &geometry, const RadioConfig &radio,
                       std::optional<std::span<const double>> phases)
    {
        radio.validate();
        geometry.require_resolvable();
        const auto n = static_cast<std::size_t>(geometry.n_elements());
        if (phases && phases->size() != n)
            throw DomainError("phase sequence has " + std::to_string(phases->size()) + " entries, the surface has " +
                              std::to_string(n));

        const ChannelVector h = synthesize_channel(source, geometry, radio.wavelength);
        const ChannelVector g = synthesize_channel(destination, geometry, radio.wavelength);

        double coherent = 0.0;
        if (!phases)
        {
            detail::CompensatedSum<long double> sum;
            for (std::size_t k = 0; k < n; ++k)
                sum.add(static_cast<long double>(h.amplitudes[k]) * g.amplitudes[k]);
            const double s = static_cast<double>(sum.value());
            coherent = s * s;
        }
        else
        {
            detail::CompensatedSum<long double> re, im;
            for (std::size_t k = 0; k < n; ++k)
            {
                const double a = h.amplitudes[k] * g.amplitudes[k];
                const double arg = (*phases)[k] - h.phases[k] - g.phases[k];
                re.add(a * std::cos(arg));
                im.add(a * std::sin(arg));
            }
            const double x = static_cast<double>(re.value());
            const double y = static_cast<double>(im.value());
            coherent = x * x + y * y;
        }

        LinkReport r;
        const double irs = radio.mu * radio.mu * coherent;
        r.snr = irs * radio.tx_snr();
        r.se = se_from_snr(r.snr);
        r.gains = {{"irs", irs}};
        r.warnings = h.warnings;
        r.warnings.insert(r.warnings.end(), g.warnings.begin(), g.warnings.end());
        return r;
    }

    LinkReport snr_irs_upper(const TerminalPlacement &source, const TerminalPlacement &destination,
                             const ArrayGeometry &geometry, const RadioConfig &radio)
    {
        radio.validate();
        LinkReport r;
        const double xi_src = offaxis(source, geometry);
        const double xi_dst = offaxis(destination, geometry);
        const double bound = xi_src * xi_dst * radio.mu * radio.mu;
        r.snr = bound * radio.tx_snr();
        r.se = se_from_snr(r.snr);
        r.gains = {{"xi_src", xi_src}, {"xi_dst", xi_dst}, {"irs_upper", bound}};
        return r;
    }

    LinkReport snr_irs_ff(const TerminalPlacement &source, const TerminalPlacement &destination,
                          const ArrayGeometry &geometry, const RadioConfig &radio)
    {
        radio.validate();
        LinkReport r;
        const double n = static_cast<double>(geometry.n_elements());
        const double mu2 = radio.mu * radio.mu;
        const double s_src = far_field(source, geometry.element_area());
        const double s_dst = far_field(destination, geometry.element_area());
        const double reflected_fraction = mu2 * n * s_dst;
        const double mmimo_ff_snr = n * s_src * radio.tx_snr();

        r.snr = reflected_fraction * mmimo_ff_snr;
        r.se = se_from_snr(r.snr);
        r.gains = {{"irs_ff", mu2 * n * n * s_src * s_dst},
                   {"reflected_fraction", reflected_fraction},
                   {"mmimo_ff_snr", mmimo_ff_snr}};
        warn_if_near(r, source, geometry, "source");
        warn_if_near(r, destination, geometry, "destination");
        if (reflected_fraction > 1.0)
        {
            r.inconsistent = true;
            r.warnings.push_back("far-field reflected fraction exceeds one; the approximation is invalid at this N");
        }
        return r;
    }

    std::vector<ScalingPoint> apply_scaling_law(const ReportFn &report, const ArrayGeometry &base_geometry,
                                                const RadioConfig &base, ScalingLaw law,
                                                std::span<const std::int64_t> n_values,
                                                std::optional<ScalingLaw> relay_law)
    {
        std::vector<ScalingPoint> out;
        out.reserve(n_values.size());
        for (std::int64_t n : n_values)
        {
            RadioConfig radio = base;
            radio.p_tx = law.power_at(static_cast<double>(n));
            if (relay_law)
                radio.p_relay = relay_law->power_at(static_cast<double>(n));
            const LinkReport r = report(base_geometry.with_elements(n), radio);
            out.push_back({n, radio.p_tx, r.snr, r.se});
        }
        return out;
    }

    std::int64_t irs_vs_mmimo_elements(std::int64_t n_mmimo, const TerminalPlacement &destination,
                                       const RadioConfig &radio, double element_area)
    {
        radio.validate();
        if (n_mmimo < 0)
            throw DomainError("N_mMIMO must be nonnegative");
        const double s_dst = far_field(destination, element_area);
        return static_cast<std::int64_t>(
            std::ceil(std::sqrt(static_cast<double>(n_mmimo) / (radio.mu * radio.mu * s_dst))));
    }

    std::int64_t irs_vs_relay_elements(std::int64_t n_relay, const TerminalPlacement &source,
                                       const TerminalPlacement &destination, const RadioConfig &radio,
                                       double element_area)
    {
        radio.validate();
        if (n_relay < 0)
            throw DomainError("N_relay must be nonnegative");
        const double s_src = far_field(source, element_area);
        const double s_dst = far_field(destination, element_area);
        const double m = std::min(radio.p_tx * s_src, radio.p_relay * s_dst) / radio.noise;
        const double k = radio.mu * radio.mu * radio.p_tx * s_src * s_dst / radio.noise;
        return static_cast<std::int64_t>(
            std::ceil(std::sqrt(sqrt1p_minus_one(static_cast<double>(n_relay) * m) / k)));
    }

    std::string_view to_string(Setup s) noexcept
    {
        switch (s)
        {
        case Setup::mmimo:
            return "mmimo";
        case Setup::relay:
            return "relay";
        case Setup::irs:
            return "irs";
        }
        return "unknown";
    }

    double se_ceiling(Setup setup, const RadioConfig &radio)
    {
        radio.validate();
        switch (setup)
        {
        case Setup::mmimo:
            return se_from_snr(planar_gain_limit * radio.tx_snr());
        case Setup::relay:
            return relay_se_from_snr(planar_gain_limit * std::min(radio.p_tx, radio.p_relay) / radio.noise);
        case Setup::irs:
            return se_from_snr(planar_gain_limit * planar_gain_limit * radio.mu * radio.mu * radio.tx_snr());
        }
        return 0.0;
    }

    ElementCount min_elements_for_se(Setup setup, double target_se, const TerminalPlacement &source,
                                     const std::optional<TerminalPlacement> &destination, const RadioConfig &radio,
                                     double element_area)
    {
        radio.validate();
        if (!std::isfinite(target_se) || target_se < 0.0)
            throw DomainError("target SE must be finite and nonnegative");
        if (setup != Setup::mmimo && !destination)
            throw DomainError(std::string(to_string(setup)) + " needs a destination placement");

        const double ceiling = se_ceiling(setup, radio);
        if (target_se >= ceiling)
        {
            const char *limit = setup == Setup::irs ? "1/9" : "1/3";
            return {ElementCount::Status::infeasible, 0,
                    "target " + std::to_string(target_se) + " bit/s/Hz is at or above the " + limit +
                        " gain ceiling of " + std::to_string(ceiling) + " bit/s/Hz"};
        }

        if (setup == Setup::irs)
        {
            // Element-resolved: search over the side length k of a k x k surface.
            auto reached = [&](std::int64_t k)
            {
                const ArrayGeometry g(k * k, element_area);
                return meets(snr_irs(source, *destination, g, radio).se, target_se);
            };
            const std::int64_t k_cap = *exact_sqrt(max_resolved_elements);
            std::int64_t hi = 1;
            while (hi < k_cap && !reached(hi))
                hi = std::min(hi * 2, k_cap);
            if (!reached(hi))
                return {ElementCount::Status::beyond_cap, 0,
                        "not reached by " + std::to_string(max_resolved_elements) + " resolved elements"};
            const std::int64_t k = bisect(hi == 1 ? 1 : hi / 2 + 1, hi, reached);
            return {ElementCount::Status::found, k * k, {}};
        }

        auto se_at = [&](std::int64_t n)
        {
            const ArrayGeometry g(n, element_area);
            return setup == Setup::mmimo ? snr_mmimo(source, g, radio).se
                                         : se_relay(source, *destination, g, radio).se;
        };
        auto reached = [&](std::int64_t n) { return meets(se_at(n), target_se); };

        std::int64_t hi = 1;
        while (hi < aggregate_search_cap && !reached(hi))
            hi = hi > aggregate_search_cap / 2 ? aggregate_search_cap : hi * 2;
        if (!reached(hi))
            return {ElementCount::Status::beyond_cap, 0, "not reached by N = 2^62"};
        return {ElementCount::Status::found, bisect(std::max<std::int64_t>(1, hi / 2), hi, reached), {}};
    }

    bool relay_vs_irs_se_condition(double snr_mmimo, double dst_gain, double mu)
    {
        if (!(snr_mmimo > 0.0) || !std::isfinite(snr_mmimo))
            throw DomainError("snr_mmimo must be positive");
        return mu * mu * dst_gain < 1.0 / (std::sqrt(1.0 + snr_mmimo) + 1.0);
    }
}
