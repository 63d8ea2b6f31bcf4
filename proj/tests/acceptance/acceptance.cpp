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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//
//   nfgain_acceptance                 all criteria
//   nfgain_acceptance --criterion 4   just one

#include "crossover.hpp"
#include "scenario.hpp"
#include "verification.hpp"

#include "nfgain/nfgain.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace nfgain;

namespace
{
    struct Verdict
    {
        bool passed = true;
        std::string detail;

        void require(bool ok, const char *fmt, ...) __attribute__((format(printf, 3, 4)))
        {
            char buf[512];
            va_list args;
            va_start(args, fmt);
            std::vsnprintf(buf, sizeof buf, fmt, args);
            va_end(args);
            if (!detail.empty())
                detail += "; ";
            detail += ok ? "" : "[miss] ";
            detail += buf;
            passed = passed && ok;
        }
    };

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point t0)
    {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

    double slope(double n0, double g0, double n1, double g1) { return std::log(g1 / g0) / std::log(n1 / n0); }

    constexpr double lambda = 0.1;
    constexpr double iso_area = lambda * lambda / (4.0 * pi);

    const TerminalPlacement fig5_src{Length{25}, Angle{pi / 6}};
    const TerminalPlacement fig5_dst{Length{2.5}, Angle{-pi / 6}};

    Verdict oracle_equivalence()
    {
        Verdict v;
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> dist(1.0, 100.0), offset(-5.0, 5.0), side(0.01, 5.0);
        double worst = 0.0;
        const auto t0 = Clock::now();
        for (int i = 0; i < 1000; ++i)
        {
            const Point3 tx{offset(rng), offset(rng), dist(rng)};
            const Point3 center{offset(rng), offset(rng), 0.0};
            const Length s{side(rng)};
            const double closed = element_gain(tx, center, s).value;
            const double numeric = oracle::quadrature_gain(tx, center, s).gain.value;
            worst = std::max(worst, rel(closed, numeric));
        }
        const double elapsed = seconds_since(t0);
        v.require(worst <= 1e-8, "worst relative error %.3e over 1000 cases (limit 1e-8)", worst);
        v.require(elapsed <= 120.0, "%.3f s (limit 120 s)", elapsed);
        return v;
    }

    Verdict additivity()
    {
        Verdict v;
        std::mt19937_64 rng(20260102);
        std::uniform_real_distribution<double> dist(0.1, 100.0), offset(-10.0, 10.0), side(1e-3, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const Point3 tx{offset(rng), offset(rng), dist(rng)};
            const double cx = offset(rng), cy = offset(rng), a = side(rng);
            double parts = 0.0;
            for (double dx : {-a / 4, a / 4})
                for (double dy : {-a / 4, a / 4})
                    parts += element_gain(tx, {cx + dx, cy + dy, 0.0}, Length{a / 2}).value;
            worst = std::max(worst, rel(parts, element_gain(tx, {cx, cy, 0.0}, Length{a}).value));
        }
        v.require(worst <= 1e-12, "worst relative error %.3e over 200 splits (limit 1e-12)", worst);
        return v;
    }

    Verdict asymptotic_limit()
    {
        Verdict v;
        // N beta_d pi = total_area / (4 d^2)
        const double d = 25.0;
        const double at_1e4 = boresight_array_gain(Length{d}, 1e4 * 4 * d * d).value;
        const double at_1e6 = boresight_array_gain(Length{d}, 1e6 * 4 * d * d).value;
        v.require(std::abs(at_1e4 - 0.3303) <= 1e-4, "gain at N beta pi = 1e4 is %.7f (want 0.3303 +- 1e-4)", at_1e4);
        v.require(at_1e6 > 0.333, "gain at N beta pi = 1e6 is %.7f (want > 0.333)", at_1e6);

        double worst = 0.0;
        for (double mu : {1.0, 0.5})
        {
            RadioConfig radio;
            radio.p_tx = 1e6;
            radio.mu = mu;
            const double ceiling = mu * mu * radio.tx_snr() / 9.0;
            for (int e = 0; e <= 120; ++e)
            {
                const double n_beta_pi = std::pow(10.0, -4.0 + 0.1 * e);
                const double area = n_beta_pi * 4 * 25.0 * 25.0;
                const double snr = snr_irs_upper(fig5_src, fig5_dst, ArrayGeometry(1, area), radio).snr;
                worst = std::max(worst, snr / ceiling);
            }
        }
        v.require(worst <= 1.0, "IRS upper bound peaks at %.9f of mu^2 P/(9 sigma^2)", worst);
        return v;
    }

    Verdict fig2()
    {
        Verdict v;
        const Length d{25};
        const double area = std::pow(wavelength_from_frequency(3e9), 2) / (4 * pi);
        auto error = [&](std::int64_t n)
        {
            const double total = static_cast<double>(n) * area;
            const double exact = boresight_array_gain(d, total).value;
            return (static_cast<double>(n) * free_space_gain(area, d).value - exact) / exact;
        };
        std::int64_t lo = 1, hi = 100'000'000;
        while (hi - lo > 1)
        {
            const std::int64_t mid = lo + (hi - lo) / 2;
            (error(mid) > 0.05 ? hi : lo) = mid;
        }
        v.require(hi >= 80'000 && hi <= 160'000, "far-field error first exceeds 5%% at N = %lld (want [8e4, 1.6e5])",
                  static_cast<long long>(hi));
        const double at_1e8 = boresight_array_gain(d, 1e8 * area).value;
        v.require(rel(at_1e8, 1.0 / 3.0) <= 0.02, "exact gain at N = 1e8 is %.5f, %.2f%% below 1/3 (want <= 2%%)",
                  at_1e8, 100 * rel(at_1e8, 1.0 / 3.0));
        return v;
    }

    Verdict fig4()
    {
        Verdict v;
        const TerminalPlacement src{Length{25}, Angle{0}};
        RadioConfig radio;
        radio.p_tx = 1.0 / snr_mmimo(src, ArrayGeometry(1, iso_area), radio).snr; // 0 dB at N = 1
        auto snr = [&](double rho, std::int64_t n)
        {
            RadioConfig r = radio;
            r.p_tx = ScalingLaw{radio.p_tx, rho}.power_at(static_cast<double>(n));
            return snr_mmimo(src, ArrayGeometry(n, iso_area), r).snr;
        };

        double worst_db = 0.0;
        std::int64_t worst_n = 1;
        for (int i = 0; i <= 60; ++i)
        {
            const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, i / 10.0)));
            const double dev = std::abs(to_db(snr(1.0, n)));
            if (dev > worst_db)
                worst_db = dev, worst_n = n;
        }
        v.require(worst_db <= 0.5, "rho = 1 drifts %.3f dB by N = %lld (want <= 0.5 dB)", worst_db,
                  static_cast<long long>(worst_n));
        const double s = slope(1e2, snr(0.5, 100), 1e6, snr(0.5, 1'000'000));
        v.require(std::abs(s - 0.5) <= 0.02, "rho = 1/2 slope %.4f over [1e2, 1e6] (want 0.5 +- 0.02)", s);
        return v;
    }

    Verdict fig5()
    {
        Verdict v;
        const RadioConfig radio;
        auto irs = [&](std::int64_t n) { return snr_irs(fig5_src, fig5_dst, ArrayGeometry(n, iso_area), radio).gain("irs"); };
        auto mmimo = [&](std::int64_t n) { return snr_mmimo(fig5_src, ArrayGeometry(n, iso_area), radio).gain("xi_src"); };

        const double irs_slope = slope(1e2, irs(100), 1e4, irs(10'000));
        const double mmimo_slope = slope(1e2, mmimo(100), 1e4, mmimo(10'000));
        v.require(std::abs(irs_slope - 2.0) <= 0.02, "IRS slope %.4f (want 2 +- 0.02)", irs_slope);
        v.require(std::abs(mmimo_slope - 1.0) <= 0.02, "mMIMO slope %.4f (want 1 +- 0.02)", mmimo_slope);

        const auto grid = app::load_scenario("builtin:fig5").n_grid.expand();
        int violations = 0;
        for (std::int64_t n : grid)
            if (!(mmimo(n) > irs(n)))
                ++violations;
        v.require(violations == 0, "mMIMO above IRS at %d of %zu grid points", static_cast<int>(grid.size()) - violations,
                  grid.size());

        const double exact = irs(10'000);
        const double ff = snr_irs_ff(fig5_src, fig5_dst, ArrayGeometry(10'000, iso_area), radio).gain("irs_ff");
        v.require(rel(exact, ff) <= 0.05, "IRS at N = 1e4 is %.4e vs far-field %.4e (%+.1f%%, want within 5%%)", exact, ff,
                  100 * (exact / ff - 1));
        return v;
    }

    Verdict fig6()
    {
        Verdict v;
        const app::Scenario s = app::load_scenario("builtin:fig6");
        app::CrossoverOptions opt;
        opt.snr_reference_db = app::derived_snr_reference_db(s, 100, 3.3);
        opt.targets = {3.3};
        const app::CrossoverResult at = app::run_crossover(s, opt);
        const auto &row = at.rows.front();
        v.require(row.mmimo.found() && row.mmimo.n == 100, "calibration %.6f dB gives N_mMIMO = %lld at 3.3 bit/s/Hz",
                  *opt.snr_reference_db, static_cast<long long>(row.mmimo.n));
        v.require(row.irs.found() && row.irs.n >= 3300 && row.irs.n <= 3700, "N_IRS = %lld (want [3300, 3700])",
                  static_cast<long long>(row.irs.n));
        opt.targets.clear(); // default sweep up to 8 bit/s/Hz
        const auto sw = app::run_crossover(s, opt).irs_below_relay_above_se;
        v.require(sw && *sw >= 4.0 && *sw <= 5.0, "IRS needs fewer elements than the relay above %.2f bit/s/Hz (want [4, 5])",
                  sw.value_or(std::nan("")));
        return v;
    }

    Verdict fig7()
    {
        Verdict v;
        const TerminalPlacement src{Length{25}, Angle{0}}, dst{Length{2.5}, Angle{0}};
        const RadioConfig radio;
        const double limit = mirror_limit_gain(src.distance(), dst.distance(), iso_area).value;
        v.require(rel(limit, 8.374e-8) <= 1e-3, "mirror limit %.4e", limit);

        double worst = 0.0;
        std::int64_t worst_n = 0;
        for (std::int64_t n : app::load_scenario("builtin:fig7").n_grid.expand())
        {
            if (n < 1000)
                continue;
            const std::vector<double> zero(static_cast<std::size_t>(n), 0.0);
            const double g = snr_irs(src, dst, ArrayGeometry(n, iso_area), radio, zero).gain("irs");
            if (rel(g, limit) > worst)
                worst = rel(g, limit), worst_n = n;
        }
        v.require(worst <= 0.02, "mirror-mimicking gain strays %.1f%% from the limit at N = %lld (want <= 2%% for N >= 1e3)",
                  100 * worst, static_cast<long long>(worst_n));

        const double n_aperture = mirror_max_area(src.distance(), dst.distance(), Length{lambda}) / iso_area;
        v.require(std::abs(n_aperture - 286) <= 1, "largest exploitable aperture is N = %.2f (want 286 +- 1)", n_aperture);

        const double optimized = snr_irs(src, dst, ArrayGeometry(10'000, iso_area), radio).gain("irs");
        v.require(optimized >= 100 * limit, "optimized IRS at N = 1e4 is %.0fx the mirror limit (want >= 100x)",
                  optimized / limit);
        return v;
    }

    Verdict properties()
    {
        Verdict v;
        const auto t0 = Clock::now();
        const app::VerifyReport report = app::run_verification({});
        const double elapsed = seconds_since(t0);
        for (const char *name : {"reflecting_surface_dominance", "reflecting_surface_phase_optimality",
                                 "channel_gain_partition", "primitive_three_halves_power", "primitive_five_halves_power",
                                 "primitive_arctangent_kernel", "primitive_arctangent_kernel_small_b",
                                 "offaxis_gain_even_in_angle"})
        {
            bool seen = false;
            for (const auto &c : report.checks)
                if (c.name == name)
                {
                    seen = true;
                    v.require(c.passed, "%s %.2e (limit %.0e)", name, c.worst_rel_error, c.tolerance);
                }
            if (!seen)
                v.require(false, "%s missing from the verify report", name);
        }
        v.require(report.passed(), "full verify suite %s", report.passed() ? "passes" : "fails");
        v.require(elapsed <= 300.0, "%.2f s (limit 300 s)", elapsed);
        return v;
    }

    const std::vector<std::function<Verdict()>> criteria{oracle_equivalence, additivity, asymptotic_limit, fig2, fig4,
                                                         fig5,               fig6,       fig7,             properties};
}

int main(int argc, char **argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else
        {
            std::fprintf(stderr, "usage: %s [--criterion 1..9]\n", argv[0]);
            return 1;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size()))
    {
        std::fprintf(stderr, "criterion must lie in 1..%zu\n", criteria.size());
        return 1;
    }

    bool all = true;
    for (std::size_t k = 1; k <= criteria.size(); ++k)
    {
        if (only && static_cast<int>(k) != only)
            continue;
        Verdict v;
        try
        {
            v = criteria[k - 1]();
        }
        catch (const std::exception &e)
        {
            v.require(false, "threw: %s", e.what());
        }
        std::printf("criterion %zu %s: %s\n", k, v.passed ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        all = all && v.passed;
    }
    return all ? 0 : 2;
}
