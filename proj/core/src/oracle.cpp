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

#include "nfgain/oracle.hpp"
#include "nfgain/errors.hpp"

#include "detail/compensated_sum.hpp"
#include "detail/gauss_kronrod.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <queue>
#include <random>
#include <vector>

namespace nfgain::oracle
{
    namespace
    {
        struct Cell
        {
            double x0, x1, y0, y1;
            double value;
            double error;
        };

        struct ByError
        {
            bool operator()(const Cell &a, const Cell &b) const noexcept { return a.error < b.error; }
        };

        Cell evaluate(const Point3 &tx, double x0, double x1, double y0, double y1)
        {
            const double hx = 0.5 * (x1 - x0), cx = 0.5 * (x1 + x0);
            const double hy = 0.5 * (y1 - y0), cy = 0.5 * (y1 + y0);
            long double k = 0.0L, g = 0.0L;
            for (int j = 0; j < 15; ++j)
            {
                const double ry = cy + hy * detail::gk15.nodes[j];
                long double row_k = 0.0L, row_g = 0.0L;
                for (int i = 0; i < 15; ++i)
                {
                    const double f = integrand(tx, cx + hx * detail::gk15.nodes[i], ry);
                    row_k += detail::gk15.kronrod[i] * f;
                    row_g += detail::gk15.gauss[i] * f;
                }
                k += detail::gk15.kronrod[j] * row_k;
                g += detail::gk15.gauss[j] * row_g;
            }
            const double scale = hx * hy;
            return {x0, x1, y0, y1, static_cast<double>(k * scale), static_cast<double>(std::abs(k - g) * scale)};
        }

        double rel_error(double approx, double exact)
        {
            return exact == 0.0 ? std::abs(approx) : std::abs(approx - exact) / std::abs(exact);
        }
    }

    void QuadratureSpec::validate() const
    {
        if (!(relative_tolerance > 1e-14 && relative_tolerance < 1e-2))
            throw DomainError("relative tolerance must lie in (1e-14, 1e-2)");
        if (max_subdivisions < 1)
            throw DomainError("max_subdivisions must be at least 1");
    }

    double integrand(const Point3 &transmitter, double r_x, double r_y)
    {
        const double d = transmitter.z;
        const double dx = r_x - transmitter.x;
        const double dy = r_y - transmitter.y;
        const double lateral = dx * dx + d * d;
        const double r2 = lateral + dy * dy;
        return d * lateral / (4.0 * pi * r2 * r2 * std::sqrt(r2));
    }

    QuadratureResult integrate_rectangle(const Point3 &transmitter, double x0, double x1, double y0, double y1,
                                         const QuadratureSpec &spec)
    {
        spec.validate();
        if (!(transmitter.z > 0.0))
            throw DomainError("transmitter must be strictly in front of the plane (z > 0)");
        if (!(x1 > x0) || !(y1 > y0))
            throw DomainError("integration rectangle must have positive extent");

        std::priority_queue<Cell, std::vector<Cell>, ByError> cells;
        cells.push(evaluate(transmitter, x0, x1, y0, y1));
        long double value = cells.top().value;
        long double error = cells.top().error;
        std::int64_t count = 1;

        while (error > spec.relative_tolerance * std::abs(value))
        {
            if (count + 3 > spec.max_subdivisions)
            {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "quadrature stalled at %lld cells: estimated relative error %.3e > %.3e",
                              static_cast<long long>(count), static_cast<double>(error / std::abs(value)),
                              spec.relative_tolerance);
                throw ConvergenceError(buf);
            }
            const Cell worst = cells.top();
            cells.pop();
            value -= worst.value;
            error -= worst.error;

            const double xm = 0.5 * (worst.x0 + worst.x1);
            const double ym = 0.5 * (worst.y0 + worst.y1);
            for (const Cell &c : {evaluate(transmitter, worst.x0, xm, worst.y0, ym),
                                  evaluate(transmitter, xm, worst.x1, worst.y0, ym),
                                  evaluate(transmitter, worst.x0, xm, ym, worst.y1),
                                  evaluate(transmitter, xm, worst.x1, ym, worst.y1)})
            {
                value += c.value;
                error += c.error;
                cells.push(c);
            }
            count += 3;
            if (error < 0.0L)
                error = 0.0L;
        }

        // The running totals picked up rounding from every subtraction; resum the survivors.
        detail::CompensatedSum<long double> total, total_error;
        std::vector<Cell> remaining;
        remaining.reserve(cells.size());
        while (!cells.empty())
        {
            remaining.push_back(cells.top());
            cells.pop();
        }
        for (const Cell &c : remaining)
        {
            total.add(c.value);
            total_error.add(c.error);
        }
        return {static_cast<double>(total.value()), static_cast<double>(total_error.value()), count};
    }

    OracleGain quadrature_gain(const Point3 &transmitter, const Point3 &element_center, Length side,
                               const QuadratureSpec &spec)
    {
        if (element_center.z != 0.0)
            throw DomainError("element center must lie in the plane z = 0");
        if (!(side.meters() > 0.0))
            throw DomainError("element side must be positive");
        const double h = 0.5 * side.meters();
        const QuadratureResult r = integrate_rectangle(transmitter, element_center.x - h, element_center.x + h,
                                                       element_center.y - h, element_center.y + h, spec);
        return {{r.value, Provenance::oracle}, r.abs_error};
    }

    std::string_view to_string(PrimitiveIdentity which) noexcept
    {
        switch (which)
        {
        case PrimitiveIdentity::three_halves_power:
            return "three_halves_power";
        case PrimitiveIdentity::five_halves_power:
            return "five_halves_power";
        case PrimitiveIdentity::arctangent_kernel:
            return "arctangent_kernel";
        }
        return "unknown";
    }

    namespace
    {
        template <class T>
        T primitive_in(PrimitiveIdentity which, T x, T a, T b)
        {
            using std::atan, std::sqrt;
            const T q = x * x + a;
            switch (which)
            {
            case PrimitiveIdentity::three_halves_power:
                return x / (a * sqrt(q));
            case PrimitiveIdentity::five_halves_power:
                return x / (T(3) * a * q * sqrt(q)) + T(2) * x / (T(3) * a * a * sqrt(q));
            case PrimitiveIdentity::arctangent_kernel:
                return atan(sqrt(b) * x / (sqrt(a) * sqrt(q + b))) / sqrt(a * b);
            }
            return T(0);
        }
    }

    double primitive(PrimitiveIdentity which, double x, double a, double b)
    {
        return primitive_in<double>(which, x, a, b);
    }

    double primitive_integrand(PrimitiveIdentity which, double x, double a, double b)
    {
        const double q = x * x + a;
        switch (which)
        {
        case PrimitiveIdentity::three_halves_power:
            return 1.0 / (q * std::sqrt(q));
        case PrimitiveIdentity::five_halves_power:
            return 1.0 / (q * q * std::sqrt(q));
        case PrimitiveIdentity::arctangent_kernel:
            return 1.0 / (q * std::sqrt(q + b));
        }
        return 0.0;
    }

    double primitive_slope(PrimitiveIdentity which, double x, double a, double b)
    {
        // Where the primitive is nearly flat its differences cancel almost completely, so
        // the stencil runs in extended precision.
        using T = long double;
        const T h = T(1e-3) * std::sqrt(T(x) * x + a);
        auto p = [&](T t) { return primitive_in<T>(which, t, a, b); };
        return static_cast<double>((p(x - 2 * h) - 8 * p(x - h) + 8 * p(x + h) - p(x + 2 * h)) / (12 * h));
    }

    IdentityReport primitive_identity_check(PrimitiveIdentity which, int samples, std::uint64_t seed, double fixed_b)
    {
        if (samples < 1)
            throw DomainError("need at least one sample");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> x_dist(-10.0, 10.0);
        std::uniform_real_distribution<double> log_dist(-2.0, 2.0);

        IdentityReport report;
        report.which = which;
        report.samples = samples;
        for (int i = 0; i < samples; ++i)
        {
            const double x = x_dist(rng);
            const double a = std::pow(10.0, log_dist(rng));
            const double drawn_b = std::pow(10.0, log_dist(rng));
            const double b = fixed_b > 0.0 ? fixed_b : drawn_b;
            const double err = rel_error(primitive_slope(which, x, a, b), primitive_integrand(which, x, a, b));
            report.worst_rel_error = std::max(report.worst_rel_error, err);
        }
        report.passed = report.worst_rel_error <= report.tolerance;
        return report;
    }

    void write_report(std::ostream &os, std::span<const CheckResult> checks)
    {
        char buf[64];
        for (const auto &c : checks)
        {
            os << c.name;
            std::snprintf(buf, sizeof buf, " %.3e %.1e ", c.worst_rel_error, c.tolerance);
            os << buf << (c.passed ? "pass" : "fail");
            if (!c.detail.empty())
                os << ' ' << c.detail;
            os << '\n';
        }
    }
}
