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

#include "verification.hpp"

#include "nfgain/array_channel.hpp"
#include "nfgain/geometry.hpp"
#include "nfgain/link.hpp"
#include "nfgain/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace nfgain::app
{
    namespace
    {
        using oracle::CheckResult;

        double rel(double approx, double exact) { return std::abs(approx - exact) / std::abs(exact); }

        std::string describe(const char *fmt, auto... args)
        {
            char buf[256];
            std::snprintf(buf, sizeof buf, fmt, args...);
            return buf;
        }

        // Tracks the worst relative error of a check together with where it occurred.
        struct Worst
        {
            double error = 0.0;
            std::string where;

            void offer(double e, const std::string &w)
            {
                if (!(e <= error)) // NaN always wins
                {
                    error = e;
                    where = w;
                }
            }

            CheckResult result(std::string name, double tolerance) const
            {
                const bool ok = error <= tolerance;
                return {std::move(name), error, tolerance, ok, ok ? std::string() : "worst at " + where};
            }
        };

        class Sampler
        {
        public:
            explicit Sampler(std::uint64_t seed) : rng_(seed) {}

            double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
            double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
            std::int64_t integer(std::int64_t lo, std::int64_t hi)
            {
                return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
            }

        private:
            std::mt19937_64 rng_;
        };

        constexpr double isotropic_area = 0.1 * 0.1 / (4.0 * pi);

        struct Context
        {
            const VerifyOptions &opt;
            OffaxisModel offaxis;
        };

        CheckResult element_vs_quadrature(const Context &c)
        {
            Sampler s(c.opt.seed);
            Worst w;
            for (int i = 0; i < c.opt.element_samples; ++i)
            {
                const Point3 tx{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(1, 100)};
                const Point3 center{s.uniform(-5, 5), s.uniform(-5, 5), 0.0};
                const double side = s.uniform(0.01, 5);
                const double closed = element_gain(tx, center, Length{side}).value;
                const double quad = oracle::quadrature_gain(tx, center, Length{side}, c.opt.quadrature).gain.value;
                w.offer(rel(closed, quad), describe("tx=(%.6g,%.6g,%.6g) center=(%.6g,%.6g) side=%.6g", tx.x, tx.y,
                                                    tx.z, center.x, center.y, side));
            }
            return w.result("element_gain_vs_quadrature", 1e-8);
        }

        CheckResult additivity(const Context &c)
        {
            Sampler s(c.opt.seed + 1);
            Worst w;
            for (int i = 0; i < c.opt.additivity_samples; ++i)
            {
                const Point3 tx{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(1, 100)};
                const double cx = s.uniform(-5, 5), cy = s.uniform(-5, 5);
                const double side = s.uniform(0.01, 5);
                const double q = side / 4.0;
                const double whole = element_gain(tx, {cx, cy, 0}, Length{side}).value;
                double parts = 0.0;
                for (double dx : {-q, q})
                    for (double dy : {-q, q})
                        parts += element_gain(tx, {cx + dx, cy + dy, 0}, Length{side / 2}).value;
                w.offer(rel(parts, whole),
                        describe("tx=(%.6g,%.6g,%.6g) center=(%.6g,%.6g) side=%.6g", tx.x, tx.y, tx.z, cx, cy, side));
            }
            return w.result("element_gain_additivity", 1e-12);
        }

        CheckResult reflection_symmetry(const Context &c)
        {
            Sampler s(c.opt.seed + 2);
            Worst w;
            for (int i = 0; i < 200; ++i)
            {
                const Point3 tx{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(1, 100)};
                const Point3 center{s.uniform(-5, 5), s.uniform(-5, 5), 0.0};
                const Length side{s.uniform(0.01, 5)};
                const double g = element_gain(tx, center, side).value;
                const double gx = element_gain({2 * center.x - tx.x, tx.y, tx.z}, center, side).value;
                const double gy = element_gain({tx.x, 2 * center.y - tx.y, tx.z}, center, side).value;
                const std::string where = describe("tx=(%.6g,%.6g,%.6g)", tx.x, tx.y, tx.z);
                w.offer(rel(gx, g), where);
                w.offer(rel(gy, g), where);
            }
            return w.result("element_gain_reflection_symmetry", 1e-12);
        }

        CheckResult offaxis_vs_quadrature(const Context &c)
        {
            Sampler s(c.opt.seed + 3);
            Worst w;
            auto probe = [&](double d, double eta, double area)
            {
                const double half = 0.5 * std::sqrt(area);
                const Point3 tx{d * std::sin(eta), 0.0, d * std::cos(eta)};
                const double quad = oracle::integrate_rectangle(tx, -half, half, -half, half, c.opt.quadrature).value;
                const double closed = c.offaxis(Length{d}, Angle{eta}, area);
                w.offer(rel(closed, quad), describe("d=%.6g eta=%.6g total_area=%.6g", d, eta, area));
            };
            probe(25.0, pi / 6, 1e3 * isotropic_area);
            probe(25.0, 0.0, 1e4 * isotropic_area);
            for (int i = 0; i < c.opt.aperture_samples; ++i)
            {
                const double d = s.uniform(1, 100);
                const double eta = s.uniform(-1.3, 1.3);
                const double area = d * d * s.log_uniform(1e-4, 1e2);
                probe(d, eta, area);
            }
            return w.result("offaxis_gain_vs_quadrature", 1e-8);
        }

        CheckResult offaxis_even(const Context &c)
        {
            Sampler s(c.opt.seed + 4);
            Worst w;
            for (int i = 0; i < 500; ++i)
            {
                const double d = s.uniform(1, 100), eta = s.uniform(0.0, 1.5), area = d * d * s.log_uniform(1e-6, 1e6);
                w.offer(rel(c.offaxis(Length{d}, Angle{-eta}, area), c.offaxis(Length{d}, Angle{eta}, area)),
                        describe("d=%.6g eta=%.6g total_area=%.6g", d, eta, area));
            }
            return w.result("offaxis_gain_even_in_angle", 1e-12);
        }

        CheckResult offaxis_matches_boresight(const Context &c)
        {
            Sampler s(c.opt.seed + 5);
            Worst w;
            for (int i = 0; i < 500; ++i)
            {
                const double d = s.uniform(1, 100), area = d * d * s.log_uniform(1e-6, 1e6);
                w.offer(rel(c.offaxis(Length{d}, Angle{0.0}, area), boresight_array_gain(Length{d}, area).value),
                        describe("d=%.6g total_area=%.6g", d, area));
            }
            return w.result("offaxis_gain_at_zero_angle_matches_boresight", 1e-13);
        }

        CheckResult far_field_consistency(const Context &c)
        {
            Worst w;
            for (double d : {2.5, 25.0, 100.0})
                for (int k = -14; k <= 14; ++k)
                {
                    const double eta = 0.1 * k;
                    const double normal = d * std::cos(eta);
                    for (double fraction : {1e-3, 0.1, 1.0})
                    {
                        const double area = fraction * normal * normal / 10.0;
                        const double ff = area * std::cos(eta) / (4 * pi * d * d);
                        w.offer(rel(c.offaxis(Length{d}, Angle{eta}, area), ff),
                                describe("d=%.6g eta=%.6g total_area=%.6g", d, eta, area));
                    }
                }
            return w.result("far_field_within_rule_of_thumb", 0.05);
        }

        CheckResult asymptote(const Context &c)
        {
            Worst w;
            bool monotone = true, bounded = true;
            for (double d : {2.5, 25.0})
                for (double eta : {0.0, pi / 6, -1.2})
                {
                    double previous = 0.0;
                    for (int e = -4; e <= 30; ++e)
                    {
                        const double c2 = std::cos(eta);
                        const double area = std::pow(10.0, e) * 4 * d * d * c2 * c2; // B = 10^e
                        const double g = c.offaxis(Length{d}, Angle{eta}, area);
                        monotone = monotone && g > previous;
                        bounded = bounded && g < planar_gain_limit;
                        previous = g;
                        if (e == 6)
                            w.offer(g > 0.333 ? 0.0 : 0.333 - g, describe("d=%.6g eta=%.6g B=1e6", d, eta));
                    }
                }
            CheckResult r = w.result("offaxis_gain_approaches_one_third", 0.0);
            if (!monotone || !bounded)
            {
                r.passed = false;
                r.detail += monotone ? " not below 1/3" : " not increasing in area";
            }
            return r;
        }

        std::vector<CheckResult> primitive_identities(const Context &c)
        {
            std::vector<CheckResult> out;
            using oracle::PrimitiveIdentity;
            for (auto which : {PrimitiveIdentity::three_halves_power, PrimitiveIdentity::five_halves_power,
                               PrimitiveIdentity::arctangent_kernel})
            {
                const auto r = oracle::primitive_identity_check(which, c.opt.identity_samples, c.opt.seed + 6);
                out.push_back({"primitive_" + std::string(oracle::to_string(which)), r.worst_rel_error, r.tolerance,
                               r.passed, {}});
            }
            const auto r = oracle::primitive_identity_check(PrimitiveIdentity::arctangent_kernel, c.opt.identity_samples,
                                                            c.opt.seed + 7, 1e-6);
            out.push_back({"primitive_arctangent_kernel_small_b", r.worst_rel_error, r.tolerance, r.passed, {}});
            return out;
        }

        CheckResult gain_partition(const Context &c)
        {
            Sampler s(c.opt.seed + 8);
            Worst w;
            auto probe = [&](double d, double eta, std::int64_t n, double a)
            {
                const ArrayGeometry g(n, a);
                const auto ch = synthesize_channel({Length{d}, Angle{eta}}, g, Length{0.1});
                double sum = 0.0;
                for (double amp : ch.amplitudes)
                    sum += amp * amp;
                w.offer(rel(sum, c.offaxis(Length{d}, Angle{eta}, g.total_area())),
                        describe("d=%.6g eta=%.6g N=%lld A=%.6g", d, eta, static_cast<long long>(n), a));
            };
            probe(25, pi / 6, 16, isotropic_area);
            probe(25, 0, 10000, isotropic_area);
            probe(2.5, -pi / 6, 10000, isotropic_area);
            for (int i = 0; i < 20; ++i)
            {
                const std::int64_t k = s.integer(1, 60);
                probe(s.uniform(1, 50), s.uniform(-1.3, 1.3), k * k, s.log_uniform(1e-4, 1e-1));
            }
            return w.result("channel_gain_partition", 1e-10);
        }

        CheckResult channel_vs_quadrature(const Context &c)
        {
            Worst w;
            const ArrayGeometry g(16, isotropic_area);
            const TerminalPlacement p{Length{25}, Angle{pi / 6}};
            const auto ch = synthesize_channel(p, g, Length{0.1});
            for (std::int64_t n = 1; n <= 16; ++n)
            {
                const auto [x, y] = element_coordinates(n, g);
                const double quad =
                    oracle::quadrature_gain(p.position(), {x, y, 0}, Length{g.element_side()}, c.opt.quadrature).gain.value;
                const double amp = ch.amplitudes[static_cast<std::size_t>(n - 1)];
                w.offer(rel(amp * amp, quad), describe("element %lld", static_cast<long long>(n)));
            }
            return w.result("channel_amplitude_vs_quadrature", 1e-8);
        }

        struct RandomLink
        {
            TerminalPlacement src, dst;
            ArrayGeometry geometry;
        };

        RandomLink random_link(Sampler &s)
        {
            const std::int64_t k = s.integer(1, 40);
            return {{Length{s.uniform(1, 50)}, Angle{s.uniform(-1.3, 1.3)}},
                    {Length{s.uniform(1, 50)}, Angle{s.uniform(-1.3, 1.3)}},
                    ArrayGeometry(k * k, s.log_uniform(1e-4, 1e-1))};
        }

        std::vector<CheckResult> reflecting_surface(const Context &c)
        {
            Sampler s(c.opt.seed + 9);
            Worst dominance, strict, equality, optimality;
            RadioConfig radio;
            radio.mu = 0.8;
            bool strictly_below = true;
            for (int i = 0; i < c.opt.dominance_samples; ++i)
            {
                const RandomLink l = random_link(s);
                const std::string where = describe("d=%.4g eta=%.4g delta=%.4g omega=%.4g N=%lld A=%.4g",
                                                   l.src.distance().meters(), l.src.angle().radians(),
                                                   l.dst.distance().meters(), l.dst.angle().radians(),
                                                   static_cast<long long>(l.geometry.n_elements()),
                                                   l.geometry.element_area());
                const double irs = snr_irs(l.src, l.dst, l.geometry, radio).snr;
                const double upper = snr_irs_upper(l.src, l.dst, l.geometry, radio).snr;
                const double mmimo = snr_mmimo(l.src, l.geometry, radio).snr;
                const double relay_hop = snr_mmimo(l.dst, l.geometry, radio).snr;
                dominance.offer(std::max(0.0, irs / upper - 1.0), where);
                dominance.offer(std::max(0.0, upper / std::min(mmimo, relay_hop) - 1.0), where);
                if (!(irs < mmimo))
                {
                    strictly_below = false;
                    strict.offer(irs / mmimo, where);
                }

                const double same = snr_irs(l.src, l.src, l.geometry, radio).snr;
                equality.offer(rel(same, snr_irs_upper(l.src, l.src, l.geometry, radio).snr), where);

                if (l.geometry.n_elements() >= 2 && i % 10 == 0)
                {
                    const auto h = synthesize_channel(l.src, l.geometry, radio.wavelength);
                    const auto g = synthesize_channel(l.dst, l.geometry, radio.wavelength);
                    std::vector<double> theta(h.size());
                    for (std::size_t n = 0; n < h.size(); ++n)
                        theta[n] = h.phases[n] + g.phases[n];
                    const std::size_t flip = static_cast<std::size_t>(s.integer(0, l.geometry.n_elements() - 1));
                    theta[flip] += pi;
                    const double perturbed = snr_irs(l.src, l.dst, l.geometry, radio, std::span<const double>(theta)).snr;
                    optimality.offer(perturbed < irs ? 0.0 : perturbed / irs, where);
                }
            }
            CheckResult strict_result = strict.result("reflecting_surface_strictly_below_receiver", 0.0);
            strict_result.passed = strictly_below;
            return {dominance.result("reflecting_surface_dominance", 1e-12), strict_result,
                    equality.result("reflecting_surface_bound_tight_for_identical_hops", 1e-10),
                    optimality.result("reflecting_surface_phase_optimality", 0.0)};
        }

        CheckResult ceilings(const Context &c)
        {
            Worst w;
            RadioConfig radio;
            const TerminalPlacement src{Length{25}, Angle{pi / 6}}, dst{Length{2.5}, Angle{-pi / 6}};
            for (int e = 0; e <= 80; ++e)
            {
                // N beta pi from 1e-4 to 1e8 at the source
                const double area = std::pow(10.0, -4.0 + 0.15 * e) * 4 * 25.0 * 25.0;
                const ArrayGeometry g(1, area);
                const double mm = snr_mmimo(src, g, radio).snr / radio.tx_snr();
                const double up = snr_irs_upper(src, dst, g, radio).snr / radio.tx_snr();
                const std::string where = describe("total_area=%.6g", area);
                w.offer(std::max(0.0, mm / planar_gain_limit - 1.0), where);
                w.offer(std::max(0.0, up / (planar_gain_limit * planar_gain_limit) - 1.0), where);
            }
            (void)c;
            return w.result("asymptotic_ceilings", 0.0);
        }

        CheckResult quadrature_self_consistency(const Context &c)
        {
            Sampler s(c.opt.seed + 10);
            Worst w;
            const double tol = c.opt.quadrature.relative_tolerance;
            oracle::QuadratureSpec tighter = c.opt.quadrature;
            tighter.relative_tolerance = std::max(tol / 2, 2e-14);
            for (int i = 0; i < 20; ++i)
            {
                const Point3 tx{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(1, 100)};
                const Point3 center{s.uniform(-5, 5), s.uniform(-5, 5), 0.0};
                const Length side{s.uniform(0.01, 5)};
                const double a = oracle::quadrature_gain(tx, center, side, c.opt.quadrature).gain.value;
                const double b = oracle::quadrature_gain(tx, center, side, tighter).gain.value;
                w.offer(rel(a, b), describe("tx=(%.6g,%.6g,%.6g)", tx.x, tx.y, tx.z));
            }
            return w.result("quadrature_tolerance_halving", tol);
        }

        CheckResult quadrature_toward_limit(const Context &c)
        {
            Worst w;
            double previous = 0.0;
            bool monotone = true;
            const Point3 tx{0.0, 0.0, 1.0};
            for (int e = 0; e <= 12; ++e)
            {
                const double half = std::pow(2.0, e - 2);
                const double g = oracle::integrate_rectangle(tx, -half, half, -half, half, c.opt.quadrature).value;
                monotone = monotone && g > previous;
                previous = g;
                w.offer(std::max(0.0, g / planar_gain_limit - 1.0), describe("half_side=%.6g", half));
            }
            CheckResult r = w.result("quadrature_increases_toward_one_third", c.opt.quadrature.relative_tolerance);
            if (!monotone)
            {
                r.passed = false;
                r.detail = "not increasing in aperture";
            }
            return r;
        }
    }

    bool VerifyReport::passed() const noexcept
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
    }

    VerifyReport run_verification(const VerifyOptions &options)
    {
        options.quadrature.validate();
        Context c{options, options.offaxis};
        if (!c.offaxis)
            c.offaxis = [](Length d, Angle eta, double area) { return offaxis_array_gain(d, eta, area).value; };

        VerifyReport report;
        auto &r = report.checks;
        r.push_back(element_vs_quadrature(c));
        r.push_back(additivity(c));
        r.push_back(reflection_symmetry(c));
        r.push_back(offaxis_vs_quadrature(c));
        r.push_back(offaxis_even(c));
        r.push_back(offaxis_matches_boresight(c));
        r.push_back(far_field_consistency(c));
        r.push_back(asymptote(c));
        for (auto &x : primitive_identities(c))
            r.push_back(std::move(x));
        r.push_back(gain_partition(c));
        r.push_back(channel_vs_quadrature(c));
        for (auto &x : reflecting_surface(c))
            r.push_back(std::move(x));
        r.push_back(ceilings(c));
        r.push_back(quadrature_self_consistency(c));
        r.push_back(quadrature_toward_limit(c));
        return report;
    }
}
