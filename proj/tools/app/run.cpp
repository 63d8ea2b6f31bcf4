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

#include "run.hpp"

#include "nfgain/errors.hpp"
#include "nfgain/parallel.hpp"
#include "nfgain/propagation.hpp"

#include <cmath>
#include <map>

namespace nfgain::app
{
    namespace
    {
        struct Task
        {
            SetupKind kind;
            std::optional<double> exponent;
            std::int64_t n;
        };

        std::string label(SetupKind kind, std::optional<double> exponent)
        {
            std::string s(to_string(kind));
            if (exponent)
                s += "/rho=" + format_real(*exponent);
            return s;
        }

        struct Context
        {
            const Scenario &scenario;
            double wavelength;
            double element_area;
            double tx_reference;
            double relay_reference;
            TerminalPlacement source;
            std::optional<TerminalPlacement> destination;
        };

        struct Evaluated
        {
            Row row;
            std::vector<std::string> warnings;
        };

        Evaluated evaluate(const Context &c, const Task &t)
        {
            RadioConfig radio;
            radio.wavelength = Length{c.wavelength};
            radio.noise = c.scenario.noise_power_w;
            radio.mu = c.scenario.mu;
            const double n = static_cast<double>(t.n);
            const double shrink = t.exponent ? std::pow(n, *t.exponent) : 1.0;
            radio.p_tx = c.tx_reference / shrink;
            radio.p_relay = c.relay_reference / shrink;

            const ArrayGeometry geometry(t.n, c.element_area);
            const double mu2 = radio.mu * radio.mu;
            const double s_src = far_field_gain(c.element_area, c.source.distance(), c.source.angle()).value;
            const double s_dst = c.destination
                                     ? far_field_gain(c.element_area, c.destination->distance(), c.destination->angle()).value
                                     : 0.0;
            const double irs_ff = mu2 * n * n * s_src * s_dst;

            Evaluated out;
            Row &row = out.row;
            row.setup = label(t.kind, t.exponent);
            row.n = t.n;
            row.total_area_m2 = geometry.total_area();

            auto take = [&](const LinkReport &r, double gain, Provenance p)
            {
                row.snr = r.snr;
                row.se = r.se;
                row.gain_exact = gain;
                row.provenance = p;
                out.warnings = r.warnings;
            };

            switch (t.kind)
            {
            case SetupKind::mmimo:
            {
                const LinkReport r = snr_mmimo(c.source, geometry, radio);
                take(r, r.gain("xi_src"), Provenance::exact);
                row.gain_ff = n * s_src;
                break;
            }
            case SetupKind::mmimo_ff:
            {
                const LinkReport r = snr_mmimo_ff(c.source, geometry, radio);
                take(r, r.gain("ff_total_src"), Provenance::far_field);
                row.gain_ff = row.gain_exact;
                break;
            }
            case SetupKind::relay:
            {
                const LinkReport r = se_relay(c.source, *c.destination, geometry, radio);
                // Effective gain of the weaker hop, referred to the source power.
                take(r, r.snr * radio.noise / radio.p_tx, Provenance::exact);
                row.gain_ff = n * std::min(s_src * radio.p_tx, s_dst * radio.p_relay) / radio.p_tx;
                break;
            }
            case SetupKind::relay_ff:
            {
                LinkReport r;
                r.snr = n * std::min(s_src * radio.p_tx, s_dst * radio.p_relay) / radio.noise;
                r.se = relay_se_from_snr(r.snr);
                take(r, r.snr * radio.noise / radio.p_tx, Provenance::far_field);
                row.gain_ff = row.gain_exact;
                break;
            }
            case SetupKind::irs_exact:
            {
                const LinkReport r = snr_irs(c.source, *c.destination, geometry, radio);
                take(r, r.gain("irs"), Provenance::exact);
                row.gain_ff = irs_ff;
                break;
            }
            case SetupKind::irs_mirror:
            {
                const std::vector<double> zeros(static_cast<std::size_t>(t.n), 0.0);
                const LinkReport r = snr_irs(c.source, *c.destination, geometry, radio, std::span<const double>(zeros));
                take(r, r.gain("irs"), Provenance::exact);
                row.gain_ff = irs_ff;
                break;
            }
            case SetupKind::irs_ff:
            {
                const LinkReport r = snr_irs_ff(c.source, *c.destination, geometry, radio);
                take(r, r.gain("irs_ff"), Provenance::far_field);
                row.gain_ff = row.gain_exact;
                break;
            }
            case SetupKind::irs_upper:
            {
                const LinkReport r = snr_irs_upper(c.source, *c.destination, geometry, radio);
                take(r, r.gain("irs_upper"), Provenance::upper_bound);
                row.gain_ff = irs_ff;
                break;
            }
            case SetupKind::mirror_limit:
            {
                const double g =
                    mu2 * mirror_limit_gain(c.source.distance(), c.destination->distance(), c.element_area).value;
                LinkReport r;
                r.snr = g * radio.tx_snr();
                r.se = se_from_snr(r.snr);
                take(r, g, Provenance::mirror_limit);
                break;
            }
            }
            return out;
        }

        bool resolvable(std::int64_t n) { return n <= max_resolved_elements && is_perfect_square(n); }
    }

    double reference_tx_power(const Scenario &s, const RunOptions &options)
    {
        const std::optional<double> ref = options.snr_reference_db ? options.snr_reference_db : s.snr_reference_db;
        if (ref)
            return s.noise_power_w * from_db(*ref);
        if (s.calibration == Calibration::unit_snr_at_n1)
        {
            const TerminalPlacement src = s.source.placement();
            const double xi1 = offaxis_array_gain(src.distance(), src.angle(), s.element_area()).value;
            return s.noise_power_w / xi1;
        }
        if (s.scaling_base_power_w)
            return *s.scaling_base_power_w;
        return s.tx_power_w;
    }

    RunResult run_scenario(const Scenario &s, const RunOptions &options)
    {
        validate(s);
        if (options.snr_reference_db && !std::isfinite(*options.snr_reference_db))
            throw ValidationError("--snr-reference", "must be finite");

        const double tx_reference = reference_tx_power(s, options);
        const Context ctx{s,
                          s.wavelength(),
                          s.element_area(),
                          tx_reference,
                          s.relay_power_w.value_or(tx_reference),
                          s.source.placement(),
                          s.destination ? std::optional<TerminalPlacement>(s.destination->placement()) : std::nullopt};

        const std::vector<std::int64_t> grid = s.n_grid.expand();
        std::vector<std::optional<double>> exponents;
        if (s.scaling_exponents.empty())
            exponents.push_back(std::nullopt);
        else
            exponents.assign(s.scaling_exponents.begin(), s.scaling_exponents.end());

        std::vector<Task> tasks;
        std::map<std::string, std::int64_t> skipped;
        for (SetupKind kind : s.setups)
            for (const auto &rho : exponents)
                for (std::int64_t n : grid)
                {
                    if (element_resolved(kind) && !resolvable(n))
                    {
                        ++skipped[std::string(to_string(kind))];
                        continue;
                    }
                    tasks.push_back({kind, rho, n});
                }

        std::vector<Evaluated> results(tasks.size());
        parallel_for(tasks.size(), [&](std::size_t first, std::size_t last)
                     {
                         for (std::size_t i = first; i < last; ++i)
                             results[i] = evaluate(ctx, tasks[i]); });

        RunResult out;
        std::map<std::string, std::int64_t> warning_counts;
        out.rows.reserve(results.size());
        for (auto &e : results)
        {
            for (const auto &w : e.warnings)
                ++warning_counts[e.row.setup + ": " + w];
            out.rows.push_back(std::move(e.row));
        }

        auto &m = out.metadata;
        m["scenario"] = s.name;
        m["columns"] = {"setup", "N", "total_area_m2", "gain_exact", "gain_ff", "snr_db", "se_bps_hz", "provenance"};
        m["axes"] = {{"x", {{"column", "N"}, {"label", "number of elements N"}, {"scale", "log"}}},
                     {"y",
                      s.scaling_exponents.empty()
                          ? nlohmann::ordered_json{{"column", "gain_exact"}, {"label", "total channel gain"}, {"scale", "log"}}
                          : nlohmann::ordered_json{{"column", "snr_db"}, {"label", "SNR [dB]"}, {"scale", "linear"}}}};
        m["wavelength_m"] = ctx.wavelength;
        m["element_area_m2"] = ctx.element_area;
        m["tx_snr_db"] = to_db(tx_reference / s.noise_power_w);

        auto refs = nlohmann::ordered_json::array();
        refs.push_back({{"name", "planar limit"}, {"value", planar_gain_limit}});
        bool any_irs = false;
        for (SetupKind k : s.setups)
            any_irs = any_irs || k == SetupKind::irs_exact || k == SetupKind::irs_mirror || k == SetupKind::irs_upper ||
                      k == SetupKind::irs_ff;
        if (any_irs)
            refs.push_back({{"name", "reflecting surface limit"}, {"value", s.mu * s.mu * planar_gain_limit * planar_gain_limit}});
        if (ctx.destination)
            refs.push_back({{"name", "mirror limit"},
                            {"value", s.mu * s.mu *
                                          mirror_limit_gain(ctx.source.distance(), ctx.destination->distance(), ctx.element_area)
                                              .value}});
        m["reference_lines"] = refs;

        auto markers = nlohmann::ordered_json::array();
        const double normal = ctx.source.normal_distance();
        markers.push_back({{"name", "far-field rule of thumb (source)"},
                           {"N", normal * normal / 10.0 / ctx.element_area},
                           {"meaning", "largest N with total area <= (d cos(eta))^2 / 10"}});
        if (ctx.destination && ctx.source.angle().radians() == 0.0 && ctx.destination->angle().radians() == 0.0)
            markers.push_back({{"name", "largest mirror-exploitable aperture"},
                               {"N", mirror_max_area(ctx.source.distance(), ctx.destination->distance(), Length{ctx.wavelength}) /
                                         ctx.element_area},
                               {"meaning", "wavelength / (1/d + 1/delta), divided by the element area"}});
        m["markers"] = markers;

        auto skipped_json = nlohmann::ordered_json::object();
        for (const auto &[k, v] : skipped)
            skipped_json[k] = {{"points", v}, {"reason", "element-resolved setups need a perfect-square N <= 1e6"}};
        m["skipped"] = skipped_json;
        auto warnings = nlohmann::ordered_json::array();
        for (const auto &[w, count] : warning_counts)
            warnings.push_back({{"message", w}, {"points", count}});
        m["warnings"] = warnings;
        return out;
    }
}
