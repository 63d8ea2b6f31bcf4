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
#include "figures.hpp"
#include "nfgain/errors.hpp"
#include "output.hpp"
#include "run.hpp"
#include "scenario.hpp"
#include "verification.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace
{
    namespace app = nfgain::app;

    enum Exit
    {
        ok = 0,
        invalid = 1,
        verification_failed = 2,
        not_converged = 3,
    };

    struct Sink
    {
        std::string out;
        std::string format = "csv";
        std::optional<double> snr_reference_db;

        app::Format parsed_format() const { return *app::parse_format(format); }

        void emit(const std::string &data, const nlohmann::ordered_json &metadata) const
        {
            if (out.empty())
            {
                std::cout << data;
                return;
            }
            app::write_file_atomic(out, data);
            app::write_file_atomic(out + ".meta.json", metadata.dump(2) + "\n");
        }
    };

    void add_output_flags(CLI::App *cmd, Sink &sink)
    {
        cmd->add_option("--out", sink.out, "Write data here (plus <out>.meta.json) instead of stdout");
        cmd->add_option("--format", sink.format, "Row format")->check(CLI::IsMember({"csv", "jsonl"}));
        cmd->add_option("--snr-reference", sink.snr_reference_db, "Transmit SNR P_tx/noise in dB");
    }

    int report_validation(const nfgain::ValidationError &e)
    {
        std::cerr << "error: invalid input\n";
        for (const auto &f : e.errors())
            std::cerr << "  " << f.path << ": " << f.message << '\n';
        return invalid;
    }
}

int main(int argc, char **argv)
{
    CLI::App cli{"Near-field channel gains for planar receivers, relays and reflecting surfaces"};
    cli.require_subcommand(1);

    Sink sink;
    std::string scenario_ref, figure_name;
    double tolerance = nfgain::oracle::QuadratureSpec{}.relative_tolerance;
    std::int64_t max_subdivisions = nfgain::oracle::QuadratureSpec{}.max_subdivisions;
    std::uint64_t seed = nfgain::oracle::default_seed;
    std::vector<double> targets;

    auto *run = cli.add_subcommand("run", "Evaluate a scenario file or builtin:NAME");
    run->add_option("scenario", scenario_ref, "Scenario file or builtin:NAME")->required();
    add_output_flags(run, sink);

    auto *figure = cli.add_subcommand("figure", "Reproduce one of the reference data sets");
    figure->add_option("name", figure_name, "Figure")->required()->check(CLI::IsMember(app::figure_names()));
    add_output_flags(figure, sink);

    auto *verify = cli.add_subcommand("verify", "Run the oracle and invariant suite");
    verify->add_option("--tolerance", tolerance, "Relative tolerance of the quadrature oracle");
    verify->add_option("--max-subdivisions", max_subdivisions, "Cell budget of the quadrature oracle");
    verify->add_option("--seed", seed, "Seed for the randomized checks");
    verify->add_option("--out", sink.out, "Also write the report here");

    auto *crossover = cli.add_subcommand("crossover", "Elements each setup needs for target SEs");
    crossover->add_option("scenario", scenario_ref, "Scenario file or builtin:NAME")->default_val("builtin:fig6");
    crossover->add_option("--targets", targets, "Target SEs in bit/s/Hz")->delimiter(',');
    add_output_flags(crossover, sink);

    try
    {
        cli.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = cli.exit(e);
        return code == 0 ? ok : invalid;
    }

    try
    {
        if (*run)
        {
            app::RunOptions options;
            options.snr_reference_db = sink.snr_reference_db;
            const auto result = app::run_scenario(app::load_scenario(scenario_ref), options);
            std::ostringstream data;
            app::write_rows(data, result.rows, sink.parsed_format());
            sink.emit(data.str(), result.metadata);
        }
        else if (*figure)
        {
            const auto result = app::run_figure(figure_name, {sink.parsed_format(), sink.snr_reference_db});
            sink.emit(result.data, result.metadata);
        }
        else if (*crossover)
        {
            app::CrossoverOptions options;
            options.targets = targets;
            options.snr_reference_db = sink.snr_reference_db;
            const auto result = app::run_crossover(app::load_scenario(scenario_ref), options);
            std::ostringstream data;
            app::write_crossover(data, result, sink.parsed_format());
            sink.emit(data.str(), result.metadata);
        }
        else if (*verify)
        {
            app::VerifyOptions options;
            options.quadrature.relative_tolerance = tolerance;
            options.quadrature.max_subdivisions = max_subdivisions;
            options.seed = seed;
            const auto report = app::run_verification(options);
            std::ostringstream text;
            nfgain::oracle::write_report(text, report.checks);
            std::cout << text.str();
            if (!sink.out.empty())
                app::write_file_atomic(sink.out, text.str());
            const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](auto &c) { return !c.passed; });
            std::cerr << (failed ? std::to_string(failed) + " of " : "all ") << report.checks.size()
                      << " checks " << (failed ? "failed" : "passed") << '\n';
            return report.passed() ? ok : verification_failed;
        }
    }
    catch (const nfgain::ValidationError &e)
    {
        return report_validation(e);
    }
    catch (const nfgain::ConvergenceError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return not_converged;
    }
    catch (const nfgain::DomainError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    }
    return ok;
}
