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

#include "output.hpp"
#include "scenario.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nfgain::app
{
    struct CrossoverOptions
    {
        std::vector<double> targets; // bit/s/Hz; empty selects default_targets()
        std::optional<double> snr_reference_db;
        bool locate_relay_switch = true; // bisect for the SE where the surface starts needing fewer elements
    };

    struct CrossoverRow
    {
        double target_se = 0.0;
        ElementCount mmimo, relay, irs; // exact inversions
        // Far-field counts are unbounded; empty when above 2^62.
        std::optional<std::int64_t> mmimo_ff, relay_ff, irs_ff;
        // Far-field surface sizes that match the exact receiver / relay sizes of this row.
        std::optional<std::int64_t> irs_bound_mmimo, irs_bound_relay;
        std::vector<std::string> flags;
    };

    struct CrossoverResult
    {
        std::vector<CrossoverRow> rows;
        std::optional<double> irs_below_relay_above_se;
        nlohmann::ordered_json metadata;
    };

    // 0.1, then 0.25 to 8 in steps of 0.25, plus 3.3.
    std::vector<double> default_targets();

    // P_tx / noise [dB] for which an N-element receiver reaches `se` bit/s/Hz in the scenario's
    // source geometry: (2^se - 1) / xi_{d,eta,N}.
    double derived_snr_reference_db(const Scenario &scenario, std::int64_t n_mmimo, double se);

    // Needs a destination and an SNR reference, either from the options or the scenario.
    CrossoverResult run_crossover(const Scenario &scenario, const CrossoverOptions &options);

    void write_crossover(std::ostream &os, const CrossoverResult &result, Format format);
}
