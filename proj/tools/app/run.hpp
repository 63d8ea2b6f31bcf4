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

#include <optional>
#include <vector>

namespace nfgain::app
{
    struct RunOptions
    {
        // P_tx / noise in dB; overrides the scenario's own power settings.
        std::optional<double> snr_reference_db;
    };

    struct RunResult
    {
        std::vector<Row> rows;
        nlohmann::ordered_json metadata; // axes, reference lines, markers, warnings
    };

    // Evaluates every (setup, scaling exponent, N) point. Points run concurrently; rows come
    // back ordered by setup, then exponent, then N.
    RunResult run_scenario(const Scenario &scenario, const RunOptions &options = {});

    // Transmit power reference P (the base of any scaling law) after applying the SNR
    // reference or calibration, in watts.
    double reference_tx_power(const Scenario &scenario, const RunOptions &options = {});
}
