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
#include "output.hpp"
#include "run.hpp"
#include "scenario.hpp"
#include "verification.hpp"

#include "nfgain/errors.hpp"
#include "nfgain/propagation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nfgain;
using namespace nfgain::app;

namespace
{
    const char *minimal = R"(name = probe
setups = mmimo, irs_exact
wavelength_m = 0.1
source.distance_m = 25
source.angle_rad = pi/6
destination.distance_m = 2.5
destination.angle_rad = -pi/6
n_grid = 1, 4, 10, 100
)";

    std::vector<std::string> error_paths(const std::string &text)
    {
        try
        {
            parse_scenario(text);
        }
        catch (const ValidationError &e)
        {
            std::vector<std::string> paths;
            for (const auto &f : e.errors())
                paths.push_back(f.path);
            return paths;
        }
        return {};
    }

    bool contains(const std::vector<std::string> &v, const std::string &x)
    {
        return std::find(v.begin(), v.end(), x) != v.end();
    }
}

TEST(ParseAngle, NumbersAndPiExpressions)
{
    EXPECT_DOUBLE_EQ(*parse_angle("0.5"), 0.5);
    EXPECT_DOUBLE_EQ(*parse_angle("pi/6"), pi / 6);
    EXPECT_DOUBLE_EQ(*parse_angle("-pi/6"), -pi / 6);
    EXPECT_DOUBLE_EQ(*parse_angle(" 2*pi/5 "), 2 * pi / 5);
    EXPECT_DOUBLE_EQ(*parse_angle("pi"), pi);
    EXPECT_FALSE(parse_angle("tau").has_value());
    EXPECT_FALSE(parse_angle("").has_value());
}

TEST(Scenario, ParsesMinimalFile)
{
    const Scenario s = parse_scenario(minimal);
    EXPECT_EQ(s.name, "probe");
    ASSERT_EQ(s.setups.size(), 2u);
    EXPECT_EQ(s.setups[1], SetupKind::irs_exact);
    EXPECT_DOUBLE_EQ(s.source.angle_rad, pi / 6);
    ASSERT_TRUE(s.destination.has_value());
    EXPECT_DOUBLE_EQ(s.element_area(), 0.01 / (4 * pi));
    EXPECT_EQ(s.n_grid.expand(), (std::vector<std::int64_t>{1, 4, 10, 100}));
}

TEST(Scenario, SerializeRoundTrips)
{
    for (const auto &name : builtin_names())
    {
        const Scenario s = load_scenario("builtin:" + name);
        EXPECT_EQ(parse_scenario(serialize(s)), s) << name;
    }
    const Scenario s = parse_scenario(minimal);
    EXPECT_EQ(parse_scenario(serialize(s)), s);
}

TEST(Scenario, BuiltinsArePresent)
{
    const auto names = builtin_names();
    for (const char *n : {"example1", "fig4", "fig5", "fig6", "fig7"})
        EXPECT_TRUE(contains(names, n)) << n;
    EXPECT_THROW(load_scenario("builtin:nope"), ValidationError);
}

TEST(Scenario, FieldPathsOnBadInput)
{
    EXPECT_TRUE(contains(error_paths(std::string(minimal) + "bogus = 1\n"), "bogus"));
    EXPECT_TRUE(contains(error_paths(std::string(minimal) + "mu = 0\n"), "mu"));
    EXPECT_TRUE(contains(error_paths(std::string(minimal) + "name = again\n"), "name"));
    EXPECT_TRUE(contains(error_paths(std::string(minimal) + "frequency_hz = 3e9\n"), "wavelength_m"));

    std::string no_destination = minimal;
    no_destination.replace(no_destination.find("destination.distance_m"), 0, "# ");
    no_destination.replace(no_destination.find("destination.angle_rad"), 0, "# ");
    EXPECT_TRUE(contains(error_paths(no_destination), "destination"));

    std::string bad_angle = minimal;
    bad_angle.replace(bad_angle.find("pi/6"), 4, "pi/2");
    EXPECT_TRUE(contains(error_paths(bad_angle), "source.angle_rad"));

    std::string bad_grid = minimal;
    bad_grid.replace(bad_grid.find("1, 4, 10, 100"), 13, "4, 1");
    EXPECT_TRUE(contains(error_paths(bad_grid), "n_grid"));

    EXPECT_TRUE(contains(error_paths(std::string(minimal) + "just words\n"), "line 9"));
}

TEST(Scenario, CollectsEveryError)
{
    const auto paths = error_paths(std::string(minimal) + "mu = 2\nnoise_power_w = -1\n");
    EXPECT_TRUE(contains(paths, "mu"));
    EXPECT_TRUE(contains(paths, "noise_power_w"));
}

TEST(GridSpec, LogGridWithPerfectSquares)
{
    GridSpec g;
    g.log = LogGrid{0, 2, 10, true};
    const auto n = g.expand();
    EXPECT_EQ(n.front(), 1);
    EXPECT_EQ(n.back(), 100);
    for (std::size_t i = 0; i < n.size(); ++i)
    {
        EXPECT_TRUE(is_perfect_square(n[i]));
        if (i)
            EXPECT_GT(n[i], n[i - 1]);
    }
}

TEST(Output, FormatsAndCsvHeader)
{
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(format_real(std::nan("")), "");
    EXPECT_EQ(parse_format("jsonl"), Format::jsonl);
    EXPECT_FALSE(parse_format("xml").has_value());
    const std::vector<Row> rows{{"mmimo", 4, 0.1, 0.2, std::nullopt, 1.0, 1.0, Provenance::exact}};
    std::ostringstream csv, jsonl;
    write_rows(csv, rows, Format::csv);
    write_rows(jsonl, rows, Format::jsonl);
    EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
              "setup,N,total_area_m2,gain_exact,gain_ff,snr_db,se_bps_hz,provenance");
    EXPECT_NE(csv.str().find("mmimo,4,0.10000000000000001,0.20000000000000001,,0,1,exact"), std::string::npos);
    EXPECT_NE(jsonl.str().find("\"gain_ff\":null"), std::string::npos);
}

TEST(Output, AtomicWrite)
{
    const auto path = std::filesystem::temp_directory_path() / "nfgain_atomic_probe.txt";
    write_file_atomic(path, "hello\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "hello");
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".partial"));
    std::filesystem::remove(path);
}

TEST(Run, RowsPerSetupAndSkippedPoints)
{
    const RunResult r = run_scenario(parse_scenario(minimal));
    int mmimo = 0, irs = 0;
    for (const Row &row : r.rows)
        (row.setup == "mmimo" ? mmimo : irs)++;
    EXPECT_EQ(mmimo, 4);
    EXPECT_EQ(irs, 3); // N = 10 is not a perfect square
    EXPECT_EQ(r.metadata["skipped"]["irs_exact"]["points"].size(), 1u);
    EXPECT_EQ(r.metadata["reference_lines"].size(), 3u);
}

TEST(Run, MmimoRowMatchesLibrary)
{
    const RunResult r = run_scenario(parse_scenario(minimal));
    const double expected = offaxis_array_gain(Length{25}, Angle{pi / 6}, 100 * 0.01 / (4 * pi)).value;
    bool seen = false;
    for (const Row &row : r.rows)
        if (row.setup == "mmimo" && row.n == 100)
        {
            EXPECT_DOUBLE_EQ(row.gain_exact, expected);
            EXPECT_DOUBLE_EQ(row.snr, expected);
            seen = true;
        }
    EXPECT_TRUE(seen);
}

TEST(Run, SnrReferenceOverridesPower)
{
    RunOptions opt;
    opt.snr_reference_db = 60;
    EXPECT_DOUBLE_EQ(reference_tx_power(parse_scenario(minimal), opt), 1e6);
    EXPECT_DOUBLE_EQ(reference_tx_power(parse_scenario(minimal)), 1.0);
    const Scenario fig4 = load_scenario("builtin:fig4");
    const double xi1 = boresight_array_gain(Length{25}, 0.01 / (4 * pi)).value;
    EXPECT_NEAR(reference_tx_power(fig4) * xi1, 1.0, 1e-12);
}

TEST(Run, Deterministic)
{
    const Scenario s = load_scenario("builtin:fig7");
    std::ostringstream a, b;
    write_rows(a, run_scenario(s).rows, Format::csv);
    write_rows(b, run_scenario(s).rows, Format::csv);
    EXPECT_EQ(a.str(), b.str());
}

TEST(Crossover, NeedsReference)
{
    EXPECT_THROW(run_crossover(load_scenario("builtin:fig6"), {}), ValidationError);
}

TEST(Crossover, DerivedReferenceReproducesCalibration)
{
    const Scenario s = load_scenario("builtin:fig6");
    const double ref = derived_snr_reference_db(s, 100, 3.3);
    EXPECT_NEAR(ref, 60.0368, 1e-3);
    CrossoverOptions opt;
    opt.targets = {3.3};
    opt.snr_reference_db = ref;
    opt.locate_relay_switch = false;
    const CrossoverResult r = run_crossover(s, opt);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].mmimo.n, 100);
    ASSERT_TRUE(r.rows[0].irs_bound_mmimo.has_value());
    EXPECT_EQ(*r.rows[0].irs_bound_mmimo, 3376);
    EXPECT_TRUE(r.rows[0].irs.found());
}

TEST(Crossover, InfeasibleTargetsAreReported)
{
    CrossoverOptions opt;
    opt.targets = {40.0};
    opt.snr_reference_db = 60;
    opt.locate_relay_switch = false;
    const CrossoverResult r = run_crossover(load_scenario("builtin:fig6"), opt);
    EXPECT_EQ(r.rows[0].mmimo.status, ElementCount::Status::infeasible);
    // the far-field relay would need about 1e24 elements, beyond any integer count
    EXPECT_FALSE(r.rows[0].relay_ff.has_value());
    EXPECT_TRUE(std::find(r.rows[0].flags.begin(), r.rows[0].flags.end(), "relay_ff_beyond_cap") != r.rows[0].flags.end());
    ASSERT_TRUE(r.rows[0].mmimo_ff.has_value());
    EXPECT_GT(*r.rows[0].mmimo_ff, 1'000'000'000'000);
    std::ostringstream os;
    write_crossover(os, r, Format::csv);
    EXPECT_NE(os.str().find("infeasible"), std::string::npos);
}

TEST(Verification, PassesWithLibraryImplementation)
{
    VerifyOptions opt;
    opt.element_samples = 100;
    opt.additivity_samples = 50;
    opt.aperture_samples = 20;
    opt.dominance_samples = 20;
    const VerifyReport r = run_verification(opt);
    for (const auto &c : r.checks)
        EXPECT_TRUE(c.passed) << c.name << " " << c.worst_rel_error << " " << c.detail;
    EXPECT_TRUE(r.passed());
}

TEST(Verification, CatchesSignFlipInOffaxisFormula)
{
    VerifyOptions opt;
    opt.element_samples = 20;
    opt.additivity_samples = 20;
    opt.aperture_samples = 20;
    opt.dominance_samples = 10;
    opt.offaxis = [](Length distance, Angle angle, double total_area)
    {
        const double d = distance.meters();
        const double c = std::cos(angle.radians());
        const double b = total_area / (4.0 * d * d * c * c);
        const double t = std::tan(angle.radians());
        const double root_b = std::sqrt(b);
        double value = 0.0;
        for (double sign : {-1.0, 1.0})
        {
            const double shifted = root_b + sign * t;
            const double root = std::sqrt(b + 1.0 + shifted * shifted);
            const double numerator = root_b * (root_b - sign * t); // mutated
            value += numerator / (6.0 * pi * (b + 1.0) * root) + std::atan(numerator / root) / (3.0 * pi);
        }
        return value;
    };
    const VerifyReport r = run_verification(opt);
    EXPECT_FALSE(r.passed());
    bool flagged = false;
    for (const auto &c : r.checks)
        if (c.name == "offaxis_gain_vs_quadrature")
        {
            flagged = !c.passed;
            EXPECT_NE(c.detail.find("d="), std::string::npos);
        }
    EXPECT_TRUE(flagged);
}

TEST(Figures, KnownNamesAndMetadata)
{
    EXPECT_EQ(figure_names(), (std::vector<std::string>{"fig2", "fig4", "fig5", "fig6", "fig7"}));
    const FigureOutput out = run_figure("fig7", {});
    EXPECT_EQ(out.metadata["figure"], "fig7");
    EXPECT_EQ(out.metadata["markers"].size(), 2u);
    EXPECT_THROW(run_figure("fig3", {}), ValidationError);
    EXPECT_THROW(run_figure("fig6", {}), ValidationError);
}
