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

#include "crossover.hpp"

#include "nfgain/errors.hpp"
#include "nfgain/propagation.hpp"
#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

namespace nfgain::app
{
    namespace
    {
        // Relative gap between exact and far-field element counts worth pointing out.
        constexpr double discrepancy_flag = 0.10;

        constexpr double count_cap = 4611686018427387904.0; // 2^62

        std::optional<std::int64_t> ceil_count(double x)
        {
            if (!(x <= count_cap))
                return std::nullopt;
            return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x)));
        }

        std::string count_text(const ElementCount &c)
        {
            return c.found() ? std::to_string(c.n) : std::string();
        }

        struct Inputs
        {
            TerminalPlacement source;
            TerminalPlacement destination;
            RadioConfig radio;
            double element_area;
        };

        CrossoverRow evaluate(const Inputs &in, double target)
        {
            CrossoverRow row;
            row.target_se = target;
            row.mmimo = min_elements_for_se(Setup::mmimo, target, in.source, in.destination, in.radio, in.element_area);
            row.relay = min_elements_for_se(Setup::relay, target, in.source, in.destination, in.radio, in.element_area);
            row.irs = min_elements_for_se(Setup::irs, target, in.source, in.destination, in.radio, in.element_area);

            const double s_src = far_field_gain(in.element_area, in.source.distance(), in.source.angle()).value;
            const double s_dst = far_field_gain(in.element_area, in.destination.distance(), in.destination.angle()).value;
            const RadioConfig &r = in.radio;
            const double m = std::min(r.p_tx * s_src, r.p_relay * s_dst) / r.noise;
            const double k = r.mu * r.mu * r.p_tx * s_src * s_dst / r.noise;
            row.mmimo_ff = ceil_count(std::expm1(target * std::log(2.0)) / (s_src * r.tx_snr()));
            row.relay_ff = ceil_count(std::expm1(2.0 * target * std::log(2.0)) / m);
            row.irs_ff = ceil_count(std::sqrt(std::expm1(target * std::log(2.0)) / k));

            if (row.mmimo.found())
                row.irs_bound_mmimo = irs_vs_mmimo_elements(row.mmimo.n, in.destination, r, in.element_area);
            if (row.relay.found())
                row.irs_bound_relay = irs_vs_relay_elements(row.relay.n, in.source, in.destination, r, in.element_area);

            auto compare = [&](const char *name, const ElementCount &exact, std::optional<std::int64_t> ff_count)
            {
                if (!ff_count)
                    row.flags.push_back(std::string(name) + "_ff_beyond_cap");
                if (!exact.found() || !ff_count)
                    return;
                const std::int64_t ff = *ff_count;
                const double gap = static_cast<double>(exact.n - ff) / static_cast<double>(ff);
                if (std::abs(gap) > discrepancy_flag)
                    row.flags.push_back(std::string(name) + "_ff_gap_" + std::to_string(static_cast<int>(std::lround(100 * gap))) + "pct");
                if (exact.n < ff)
                    row.flags.push_back(std::string(name) + "_exact_below_ff");
            };
            compare("mmimo", row.mmimo, row.mmimo_ff);
            compare("relay", row.relay, row.relay_ff);
            compare("irs", row.irs, row.irs_ff);
            return row;
        }

        bool irs_needs_fewer(const CrossoverRow &row)
        {
            return row.irs.found() && row.relay.found() && row.irs.n < row.relay.n;
        }

        std::string status_text(const CrossoverRow &row)
        {
            std::string s;
            auto note = [&](const char *name, const ElementCount &c)
            {
                if (c.found())
                    return;
                s += s.empty() ? "" : ";";
                s += std::string(c.status == ElementCount::Status::infeasible ? "infeasible:" : "beyond_cap:") + name;
            };
            note("mmimo", row.mmimo);
            note("relay", row.relay);
            note("irs", row.irs);
            return s.empty() ? "ok" : s;
        }
    }

    std::vector<double> default_targets()
    {
        std::set<double> t{0.1, 3.3};
        for (int i = 1; i <= 32; ++i)
            t.insert(0.25 * i);
        return {t.begin(), t.end()};
    }

    double derived_snr_reference_db(const Scenario &scenario, std::int64_t n_mmimo, double se)
    {
        const TerminalPlacement src = scenario.source.placement();
        const double xi = offaxis_array_gain(src.distance(), src.angle(),
                                             static_cast<double>(n_mmimo) * scenario.element_area())
                              .value;
        return to_db(std::expm1(se * std::log(2.0)) / xi);
    }

    CrossoverResult run_crossover(const Scenario &scenario, const CrossoverOptions &options)
    {
        validate(scenario);
        if (!scenario.destination)
            throw ValidationError("destination", "crossover compares relay and surface setups and needs a destination");
        const std::optional<double> ref = options.snr_reference_db ? options.snr_reference_db : scenario.snr_reference_db;
        if (!ref && scenario.calibration == Calibration::none)
        {
            char hint[160];
            std::snprintf(hint, sizeof hint,
                          "an SNR reference is required; %.17g dB makes a 100-element receiver reach 3.3 bit/s/Hz here",
                          derived_snr_reference_db(scenario, 100, 3.3));
            throw ValidationError("--snr-reference", hint);
        }
        std::vector<double> targets = options.targets.empty() ? default_targets() : options.targets;
        for (double t : targets)
            if (!std::isfinite(t) || t < 0.0)
                throw ValidationError("--targets", "target SEs must be finite and nonnegative");
        if (targets.empty())
            throw ValidationError("--targets", "at least one target SE is required");

        RunOptions run_options;
        run_options.snr_reference_db = ref;
        const double p_tx = reference_tx_power(scenario, run_options);
        Inputs in{scenario.source.placement(), scenario.destination->placement(), {}, scenario.element_area()};
        in.radio.wavelength = Length{scenario.wavelength()};
        in.radio.p_tx = p_tx;
        in.radio.p_relay = scenario.relay_power_w.value_or(p_tx);
        in.radio.noise = scenario.noise_power_w;
        in.radio.mu = scenario.mu;

        CrossoverResult out;
        for (double t : targets)
            out.rows.push_back(evaluate(in, t));

        if (options.locate_relay_switch)
        {
            // Bracket the switch on the sorted targets, then bisect it down to 0.01 bit/s/Hz.
            std::vector<const CrossoverRow *> sorted;
            for (const auto &r : out.rows)
                sorted.push_back(&r);
            std::sort(sorted.begin(), sorted.end(), [](auto *a, auto *b) { return a->target_se < b->target_se; });
            for (std::size_t i = 1; i < sorted.size(); ++i)
            {
                if (irs_needs_fewer(*sorted[i - 1]) || !irs_needs_fewer(*sorted[i]))
                    continue;
                double lo = sorted[i - 1]->target_se, hi = sorted[i]->target_se;
                while (hi - lo > 0.01)
                {
                    const double mid = 0.5 * (lo + hi);
                    (irs_needs_fewer(evaluate(in, mid)) ? hi : lo) = mid;
                }
                out.irs_below_relay_above_se = 0.5 * (lo + hi);
                break;
            }
        }

        auto &m = out.metadata;
        m["scenario"] = scenario.name;
        m["tx_snr_db"] = to_db(p_tx / scenario.noise_power_w);
        m["columns"] = {"target_se", "n_mmimo", "n_relay", "n_irs", "n_mmimo_ff", "n_relay_ff", "n_irs_ff",
                        "n_irs_bound_mmimo", "n_irs_bound_relay", "status", "flags"};
        m["axes"] = {{"x", {{"column", "target_se"}, {"label", "SE [bit/s/Hz]"}, {"scale", "linear"}}},
                     {"y", {{"column", "n_*"}, {"label", "number of elements N"}, {"scale", "log"}}}};
        m["irs_below_relay_above_se"] =
            out.irs_below_relay_above_se ? nlohmann::ordered_json(*out.irs_below_relay_above_se) : nlohmann::ordered_json(nullptr);
        m["se_ceilings"] = {{"mmimo", se_ceiling(Setup::mmimo, in.radio)},
                            {"relay", se_ceiling(Setup::relay, in.radio)},
                            {"irs", se_ceiling(Setup::irs, in.radio)}};
        return out;
    }

    void write_crossover(std::ostream &os, const CrossoverResult &result, Format format)
    {
        auto bound = [](const std::optional<std::int64_t> &b) { return b ? std::to_string(*b) : std::string(); };
        auto flags = [](const CrossoverRow &r)
        {
            std::string s;
            for (const auto &f : r.flags)
                s += (s.empty() ? "" : ";") + f;
            return s;
        };
        if (format == Format::csv)
        {
            os << "target_se,n_mmimo,n_relay,n_irs,n_mmimo_ff,n_relay_ff,n_irs_ff,n_irs_bound_mmimo,n_irs_bound_relay,"
                  "status,flags\n";
            for (const auto &r : result.rows)
                os << format_real(r.target_se) << ',' << count_text(r.mmimo) << ',' << count_text(r.relay) << ','
                   << count_text(r.irs) << ',' << bound(r.mmimo_ff) << ',' << bound(r.relay_ff) << ',' << bound(r.irs_ff) << ','
                   << bound(r.irs_bound_mmimo) << ',' << bound(r.irs_bound_relay) << ',' << status_text(r) << ','
                   << flags(r) << '\n';
            return;
        }
        auto count_json = [](const ElementCount &c)
        { return c.found() ? nlohmann::ordered_json(c.n) : nlohmann::ordered_json(nullptr); };
        auto bound_json = [](const std::optional<std::int64_t> &b)
        { return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr); };
        for (const auto &r : result.rows)
        {
            nlohmann::ordered_json j;
            j["target_se"] = r.target_se;
            j["n_mmimo"] = count_json(r.mmimo);
            j["n_relay"] = count_json(r.relay);
            j["n_irs"] = count_json(r.irs);
            j["n_mmimo_ff"] = bound_json(r.mmimo_ff);
            j["n_relay_ff"] = bound_json(r.relay_ff);
            j["n_irs_ff"] = bound_json(r.irs_ff);
            j["n_irs_bound_mmimo"] = bound_json(r.irs_bound_mmimo);
            j["n_irs_bound_relay"] = bound_json(r.irs_bound_relay);
            j["status"] = status_text(r);
            j["flags"] = r.flags;
            os << j.dump() << '\n';
        }
    }
}
