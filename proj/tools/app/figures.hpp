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

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfgain::app
{
    struct FigureOptions
    {
        Format format = Format::csv;
        std::optional<double> snr_reference_db;
    };

    struct FigureOutput
    {
        std::string data;
        nlohmann::ordered_json metadata;
    };

    std::vector<std::string> figure_names();

    // fig2, fig4, fig5 and fig7 run their built-in scenario; fig6 runs the element-count
    // crossover and needs an SNR reference.
    FigureOutput run_figure(std::string_view name, const FigureOptions &options);
}
