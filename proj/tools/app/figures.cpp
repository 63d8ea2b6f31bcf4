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

#include "figures.hpp"

#include "crossover.hpp"
#include "nfgain/errors.hpp"
#include "run.hpp"
#include "scenario.hpp"

#include <sstream>

namespace nfgain::app
{
    namespace
    {
        const char *scenario_for(std::string_view figure)
        {
            if (figure == "fig2")
                return "example1";
            if (figure == "fig4")
                return "fig4";
            if (figure == "fig5")
                return "fig5";
            if (figure == "fig6")
                return "fig6";
            if (figure == "fig7")
                return "fig7";
            return nullptr;
        }
    }

    std::vector<std::string> figure_names() { return {"fig2", "fig4", "fig5", "fig6", "fig7"}; }

    FigureOutput run_figure(std::string_view name, const FigureOptions &options)
    {
        const char *builtin = scenario_for(name);
        if (!builtin)
            throw ValidationError("figure", "unknown figure '" + std::string(name) + "' (known: fig2, fig4, fig5, fig6, fig7)");
        const Scenario scenario = parse_scenario(builtin_text(builtin));

        FigureOutput out;
        std::ostringstream data;
        if (name == "fig6")
        {
            CrossoverOptions co;
            co.snr_reference_db = options.snr_reference_db;
            const CrossoverResult r = run_crossover(scenario, co);
            write_crossover(data, r, options.format);
            out.metadata = r.metadata;
        }
        else
        {
            RunOptions ro;
            ro.snr_reference_db = options.snr_reference_db;
            const RunResult r = run_scenario(scenario, ro);
            write_rows(data, r.rows, options.format);
            out.metadata = r.metadata;
        }
        out.metadata["figure"] = std::string(name);
        out.data = data.str();
        return out;
    }
}
