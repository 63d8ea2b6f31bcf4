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

#include "scenario.hpp"

#include "nfgain/errors.hpp"
#include "nfgain/units.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace nfgain::app
{
    namespace
    {
        constexpr SetupKind all_setups[] = {SetupKind::mmimo,     SetupKind::mmimo_ff,   SetupKind::relay,
                                            SetupKind::relay_ff,  SetupKind::irs_exact,  SetupKind::irs_mirror,
                                            SetupKind::irs_ff,    SetupKind::irs_upper,  SetupKind::mirror_limit};

        const std::set<std::string, std::less<>> known_keys{
            "name",
            "setups",
            "wavelength_m",
            "frequency_hz",
            "element_area_m2",
            "tx_power_w",
            "relay_power_w",
            "noise_power_w",
            "mu",
            "snr_reference_db",
            "calibration",
            "source.distance_m",
            "source.angle_rad",
            "destination.distance_m",
            "destination.angle_rad",
            "scaling.base_power_w",
            "scaling.exponents",
            "n_grid",
            "n_grid.log10_min",
            "n_grid.log10_max",
            "n_grid.points_per_decade",
            "n_grid.perfect_squares",
        };

        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split_list(std::string_view s)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto comma = s.find(',');
                out.push_back(trim(s.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                s.remove_prefix(comma + 1);
            }
            return out;
        }

        template <class T>
        std::optional<T> parse_number(std::string_view s) noexcept
        {
            T value{};
            const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || end != s.data() + s.size())
                return std::nullopt;
            if constexpr (std::is_floating_point_v<T>)
                if (!std::isfinite(value))
                    return std::nullopt;
            return value;
        }

        std::string fmt17(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        // Pulls typed values out of the raw key/value map, recording every failure.
        class Reader
        {
        public:
            explicit Reader(std::map<std::string, std::string, std::less<>> raw) : raw_(std::move(raw)) {}

            std::vector<FieldError> errors;

            bool has(std::string_view key) const { return raw_.find(key) != raw_.end(); }

            std::optional<std::string> text(std::string_view key) const
            {
                const auto it = raw_.find(key);
                return it == raw_.end() ? std::nullopt : std::optional<std::string>(it->second);
            }

            std::optional<double> real(std::string_view key)
            {
                const auto t = text(key);
                if (!t)
                    return std::nullopt;
                const auto v = parse_number<double>(*t);
                if (!v)
                    fail(key, "expected a finite number, got '" + *t + "'");
                return v;
            }

            std::optional<double> angle(std::string_view key)
            {
                const auto t = text(key);
                if (!t)
                    return std::nullopt;
                const auto v = parse_angle(*t);
                if (!v)
                    fail(key, "expected radians or a multiple of pi such as 'pi/6', got '" + *t + "'");
                return v;
            }

            std::optional<std::int64_t> integer(std::string_view key)
            {
                const auto t = text(key);
                if (!t)
                    return std::nullopt;
                const auto v = parse_number<std::int64_t>(*t);
                if (!v)
                    fail(key, "expected an integer, got '" + *t + "'");
                return v;
            }

            std::optional<bool> boolean(std::string_view key)
            {
                const auto t = text(key);
                if (!t)
                    return std::nullopt;
                if (*t == "true")
                    return true;
                if (*t == "false")
                    return false;
                fail(key, "expected 'true' or 'false', got '" + *t + "'");
                return std::nullopt;
            }

            void fail(std::string_view key, std::string message) { errors.push_back({std::string(key), std::move(message)}); }

        private:
            std::map<std::string, std::string, std::less<>> raw_;
        };

        void check_positive(std::vector<FieldError> &errors, const std::string &path, double v)
        {
            if (!std::isfinite(v) || !(v > 0.0))
                errors.push_back({path, "must be positive and finite"});
        }

        void check_placement(std::vector<FieldError> &errors, const std::string &prefix, const PlacementSpec &p)
        {
            check_positive(errors, prefix + ".distance_m", p.distance_m);
            if (!(std::abs(p.angle_rad) < pi / 2))
                errors.push_back({prefix + ".angle_rad", "|angle| must be below pi/2"});
        }

        const std::map<std::string, std::string, std::less<>> &builtins()
        {
            static const std::map<std::string, std::string, std::less<>> table{
                {"example1", R"(# Single-antenna source on the normal of a planar receiver at 3 GHz.
name = example1
setups = mmimo, mmimo_ff
wavelength_m = 0.1
element_area_m2 = isotropic
source.distance_m = 25
source.angle_rad = 0
n_grid.log10_min = 0
n_grid.log10_max = 10
n_grid.points_per_decade = 10
)"},
                {"fig4", R"(# Receiver SNR when the transmit power shrinks as P / N^rho.
name = fig4
setups = mmimo
wavelength_m = 0.1
element_area_m2 = isotropic
calibration = unit_snr_at_n1
source.distance_m = 25
source.angle_rad = 0
scaling.exponents = 0, 0.5, 1
n_grid.log10_min = 0
n_grid.log10_max = 10
n_grid.points_per_decade = 10
)"},
                {"fig5", R"(# Receiver versus reflecting surface, off-axis source and destination.
name = fig5
setups = mmimo, irs_exact, irs_ff, irs_upper
wavelength_m = 0.1
element_area_m2 = isotropic
mu = 1
source.distance_m = 25
source.angle_rad = pi/6
destination.distance_m = 2.5
destination.angle_rad = -pi/6
n_grid.log10_min = 0
n_grid.log10_max = 5
n_grid.points_per_decade = 10
n_grid.perfect_squares = true
)"},
                {"fig6", R"(# Elements needed per setup for a target SE. Pair with an SNR reference.
name = fig6
setups = mmimo, relay, irs_exact
wavelength_m = 0.1
element_area_m2 = isotropic
mu = 1
source.distance_m = 25
source.angle_rad = pi/6
destination.distance_m = 2.5
destination.angle_rad = -pi/6
n_grid.log10_min = 0
n_grid.log10_max = 5
n_grid.points_per_decade = 10
n_grid.perfect_squares = true
)"},
                {"fig7", R"(# Co-phased surface versus one that imitates a flat mirror, both terminals centered.
name = fig7
setups = irs_exact, irs_mirror, mirror_limit
wavelength_m = 0.1
element_area_m2 = isotropic
mu = 1
source.distance_m = 25
source.angle_rad = 0
destination.distance_m = 2.5
destination.angle_rad = 0
n_grid.log10_min = 0
n_grid.log10_max = 5
n_grid.points_per_decade = 10
n_grid.perfect_squares = true
)"},
            };
            return table;
        }
    }

    std::string_view to_string(SetupKind kind) noexcept
    {
        switch (kind)
        {
        case SetupKind::mmimo:
            return "mmimo";
        case SetupKind::mmimo_ff:
            return "mmimo_ff";
        case SetupKind::relay:
            return "relay";
        case SetupKind::relay_ff:
            return "relay_ff";
        case SetupKind::irs_exact:
            return "irs_exact";
        case SetupKind::irs_mirror:
            return "irs_mirror";
        case SetupKind::irs_ff:
            return "irs_ff";
        case SetupKind::irs_upper:
            return "irs_upper";
        case SetupKind::mirror_limit:
            return "mirror_limit";
        }
        return "unknown";
    }

    std::optional<SetupKind> parse_setup(std::string_view name) noexcept
    {
        for (SetupKind k : all_setups)
            if (to_string(k) == name)
                return k;
        return std::nullopt;
    }

    bool needs_destination(SetupKind kind) noexcept
    {
        return kind != SetupKind::mmimo && kind != SetupKind::mmimo_ff;
    }

    bool element_resolved(SetupKind kind) noexcept
    {
        return kind == SetupKind::irs_exact || kind == SetupKind::irs_mirror;
    }

    std::optional<double> parse_angle(std::string_view text) noexcept
    {
        if (auto plain = parse_number<double>(text))
            return plain;
        static const std::regex pattern(R"(^\s*([+-])?\s*(?:([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*\s*)?pi\s*(?:/\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))?\s*$)");
        std::cmatch m;
        const std::string s(text);
        if (!std::regex_match(s.c_str(), m, pattern))
            return std::nullopt;
        double value = pi;
        if (m[2].matched)
            value *= std::stod(m[2].str());
        if (m[3].matched)
        {
            const double den = std::stod(m[3].str());
            if (den == 0.0)
                return std::nullopt;
            value /= den;
        }
        if (m[1].matched && m[1].str() == "-")
            value = -value;
        return value;
    }

    std::vector<std::int64_t> GridSpec::expand() const
    {
        if (!log)
            return values;
        std::vector<std::int64_t> out;
        const auto first = static_cast<std::int64_t>(std::ceil(log->log10_min * log->points_per_decade - 1e-9));
        const auto last = static_cast<std::int64_t>(std::floor(log->log10_max * log->points_per_decade + 1e-9));
        for (std::int64_t i = first; i <= last; ++i)
        {
            auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, static_cast<double>(i) / log->points_per_decade)));
            if (log->perfect_squares)
            {
                const auto k = std::max<std::int64_t>(1, std::llround(std::sqrt(static_cast<double>(n))));
                n = k * k;
            }
            n = std::max<std::int64_t>(n, 1);
            if (out.empty() || n > out.back())
                out.push_back(n);
        }
        return out;
    }

    double Scenario::wavelength() const
    {
        if (wavelength_m)
            return *wavelength_m;
        if (frequency_hz)
            return wavelength_from_frequency(*frequency_hz);
        throw DomainError("scenario has neither wavelength_m nor frequency_hz");
    }

    double Scenario::element_area() const
    {
        if (element_area_m2)
            return *element_area_m2;
        const double lambda = wavelength();
        return lambda * lambda / (4.0 * pi);
    }

    void validate(const Scenario &s)
    {
        std::vector<FieldError> errors;
        static const std::regex name_pattern("^[A-Za-z0-9_.-]+$");
        if (!std::regex_match(s.name, name_pattern))
            errors.push_back({"name", "must be a non-empty identifier of letters, digits, '_', '-' or '.'"});

        if (s.setups.empty())
            errors.push_back({"setups", "at least one setup is required"});
        for (std::size_t i = 0; i < s.setups.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (s.setups[i] == s.setups[j])
                    errors.push_back({"setups", "'" + std::string(to_string(s.setups[i])) + "' listed twice"});

        if (s.wavelength_m.has_value() == s.frequency_hz.has_value())
            errors.push_back({"wavelength_m", "give exactly one of wavelength_m and frequency_hz"});
        if (s.wavelength_m)
            check_positive(errors, "wavelength_m", *s.wavelength_m);
        if (s.frequency_hz)
            check_positive(errors, "frequency_hz", *s.frequency_hz);
        if (s.element_area_m2)
            check_positive(errors, "element_area_m2", *s.element_area_m2);

        check_positive(errors, "tx_power_w", s.tx_power_w);
        if (s.relay_power_w)
            check_positive(errors, "relay_power_w", *s.relay_power_w);
        check_positive(errors, "noise_power_w", s.noise_power_w);
        if (!(s.mu > 0.0 && s.mu <= 1.0))
            errors.push_back({"mu", "must lie in (0, 1]"});
        if (s.snr_reference_db && !std::isfinite(*s.snr_reference_db))
            errors.push_back({"snr_reference_db", "must be finite"});
        if (s.snr_reference_db && s.calibration != Calibration::none)
            errors.push_back({"calibration", "conflicts with snr_reference_db; choose one"});

        check_placement(errors, "source", s.source);
        if (s.destination)
            check_placement(errors, "destination", *s.destination);
        else
            for (SetupKind k : s.setups)
                if (needs_destination(k))
                {
                    errors.push_back({"destination", "required by setup '" + std::string(to_string(k)) + "'"});
                    break;
                }

        if (s.scaling_base_power_w)
            check_positive(errors, "scaling.base_power_w", *s.scaling_base_power_w);
        if (s.scaling_base_power_w && s.scaling_exponents.empty())
            errors.push_back({"scaling.exponents", "required when scaling.base_power_w is given"});
        for (double rho : s.scaling_exponents)
            if (!std::isfinite(rho) || rho < 0.0)
                errors.push_back({"scaling.exponents", "exponents must be nonnegative"});

        if (s.n_grid.log && !s.n_grid.values.empty())
            errors.push_back({"n_grid", "give either an explicit list or the log10 range, not both"});
        if (s.n_grid.log)
        {
            const LogGrid &g = *s.n_grid.log;
            if (!(g.log10_min >= 0.0))
                errors.push_back({"n_grid.log10_min", "must be at least 0"});
            if (!(g.log10_max >= g.log10_min) || !(g.log10_max <= 18.0))
                errors.push_back({"n_grid.log10_max", "must lie in [log10_min, 18]"});
            if (g.points_per_decade < 1 || g.points_per_decade > 1000)
                errors.push_back({"n_grid.points_per_decade", "must lie in [1, 1000]"});
        }
        else
        {
            if (s.n_grid.values.empty())
                errors.push_back({"n_grid", "must list at least one N"});
            for (std::size_t i = 0; i < s.n_grid.values.size(); ++i)
            {
                if (s.n_grid.values[i] < 1)
                    errors.push_back({"n_grid", "every N must be at least 1"});
                if (i > 0 && s.n_grid.values[i] <= s.n_grid.values[i - 1])
                    errors.push_back({"n_grid", "values must be strictly increasing"});
            }
        }

        if (!errors.empty())
            throw ValidationError(std::move(errors));
    }

    Scenario parse_scenario(std::string_view text)
    {
        std::map<std::string, std::string, std::less<>> raw;
        std::vector<FieldError> syntax;
        std::istringstream lines{std::string(text)};
        std::string line;
        int line_no = 0;
        while (std::getline(lines, line))
        {
            ++line_no;
            std::string_view view = line;
            if (const auto hash = view.find('#'); hash != std::string_view::npos)
                view = view.substr(0, hash);
            view = trim(view);
            if (view.empty())
                continue;
            const auto eq = view.find('=');
            if (eq == std::string_view::npos)
            {
                syntax.push_back({"line " + std::to_string(line_no), "expected 'key = value'"});
                continue;
            }
            const std::string key(trim(view.substr(0, eq)));
            const std::string value(trim(view.substr(eq + 1)));
            if (!known_keys.contains(key))
                syntax.push_back({key, "unknown key (line " + std::to_string(line_no) + ")"});
            else if (!raw.emplace(key, value).second)
                syntax.push_back({key, "given more than once (line " + std::to_string(line_no) + ")"});
        }

        Reader in(std::move(raw));
        in.errors = std::move(syntax);
        Scenario s;

        if (auto v = in.text("name"))
            s.name = *v;
        else
            in.fail("name", "required");

        if (auto v = in.text("setups"))
        {
            for (auto item : split_list(*v))
                if (auto kind = parse_setup(item))
                    s.setups.push_back(*kind);
                else
                    in.fail("setups", "unknown setup '" + std::string(item) + "'");
        }
        else
            in.fail("setups", "required");

        s.wavelength_m = in.real("wavelength_m");
        s.frequency_hz = in.real("frequency_hz");
        if (auto v = in.text("element_area_m2"); v && *v != "isotropic")
            s.element_area_m2 = in.real("element_area_m2");

        if (auto v = in.real("tx_power_w"))
            s.tx_power_w = *v;
        s.relay_power_w = in.real("relay_power_w");
        if (auto v = in.real("noise_power_w"))
            s.noise_power_w = *v;
        if (auto v = in.real("mu"))
            s.mu = *v;
        s.snr_reference_db = in.real("snr_reference_db");
        if (auto v = in.text("calibration"))
        {
            if (*v == "unit_snr_at_n1")
                s.calibration = Calibration::unit_snr_at_n1;
            else if (*v != "none")
                in.fail("calibration", "expected 'none' or 'unit_snr_at_n1', got '" + *v + "'");
        }

        auto placement = [&](const std::string &prefix) -> std::optional<PlacementSpec>
        {
            const auto d = in.real(prefix + ".distance_m");
            const auto a = in.angle(prefix + ".angle_rad");
            if (!d && !a && !in.has(prefix + ".distance_m") && !in.has(prefix + ".angle_rad"))
                return std::nullopt;
            if (!in.has(prefix + ".distance_m"))
                in.fail(prefix + ".distance_m", "required when " + prefix + " is given");
            return PlacementSpec{d.value_or(1.0), a.value_or(0.0)};
        };
        if (auto p = placement("source"))
            s.source = *p;
        else
            in.fail("source.distance_m", "required");
        s.destination = placement("destination");

        s.scaling_base_power_w = in.real("scaling.base_power_w");
        if (auto v = in.text("scaling.exponents"))
        {
            for (auto item : split_list(*v))
                if (auto rho = parse_number<double>(item))
                    s.scaling_exponents.push_back(*rho);
                else
                    in.fail("scaling.exponents", "expected numbers, got '" + std::string(item) + "'");
        }

        if (auto v = in.text("n_grid"))
        {
            for (auto item : split_list(*v))
                if (auto n = parse_number<std::int64_t>(item))
                    s.n_grid.values.push_back(*n);
                else
                    in.fail("n_grid", "expected integers, got '" + std::string(item) + "'");
        }
        const bool any_log = in.has("n_grid.log10_min") || in.has("n_grid.log10_max") ||
                             in.has("n_grid.points_per_decade") || in.has("n_grid.perfect_squares");
        if (any_log)
        {
            LogGrid g;
            if (auto v = in.real("n_grid.log10_min"))
                g.log10_min = *v;
            if (auto v = in.real("n_grid.log10_max"))
                g.log10_max = *v;
            if (auto v = in.integer("n_grid.points_per_decade"))
                g.points_per_decade = static_cast<int>(std::clamp<std::int64_t>(*v, -1, 1001));
            if (auto v = in.boolean("n_grid.perfect_squares"))
                g.perfect_squares = *v;
            s.n_grid.log = g;
        }

        if (!in.errors.empty())
            throw ValidationError(std::move(in.errors));
        validate(s);
        return s;
    }

    std::string serialize(const Scenario &s)
    {
        std::ostringstream os;
        os << "name = " << s.name << '\n';
        os << "setups = ";
        for (std::size_t i = 0; i < s.setups.size(); ++i)
            os << (i ? ", " : "") << to_string(s.setups[i]);
        os << '\n';
        if (s.wavelength_m)
            os << "wavelength_m = " << fmt17(*s.wavelength_m) << '\n';
        if (s.frequency_hz)
            os << "frequency_hz = " << fmt17(*s.frequency_hz) << '\n';
        os << "element_area_m2 = " << (s.element_area_m2 ? fmt17(*s.element_area_m2) : "isotropic") << '\n';
        os << "tx_power_w = " << fmt17(s.tx_power_w) << '\n';
        if (s.relay_power_w)
            os << "relay_power_w = " << fmt17(*s.relay_power_w) << '\n';
        os << "noise_power_w = " << fmt17(s.noise_power_w) << '\n';
        os << "mu = " << fmt17(s.mu) << '\n';
        if (s.snr_reference_db)
            os << "snr_reference_db = " << fmt17(*s.snr_reference_db) << '\n';
        os << "calibration = " << (s.calibration == Calibration::unit_snr_at_n1 ? "unit_snr_at_n1" : "none") << '\n';
        os << "source.distance_m = " << fmt17(s.source.distance_m) << '\n';
        os << "source.angle_rad = " << fmt17(s.source.angle_rad) << '\n';
        if (s.destination)
        {
            os << "destination.distance_m = " << fmt17(s.destination->distance_m) << '\n';
            os << "destination.angle_rad = " << fmt17(s.destination->angle_rad) << '\n';
        }
        if (s.scaling_base_power_w)
            os << "scaling.base_power_w = " << fmt17(*s.scaling_base_power_w) << '\n';
        if (!s.scaling_exponents.empty())
        {
            os << "scaling.exponents = ";
            for (std::size_t i = 0; i < s.scaling_exponents.size(); ++i)
                os << (i ? ", " : "") << fmt17(s.scaling_exponents[i]);
            os << '\n';
        }
        if (s.n_grid.log)
        {
            os << "n_grid.log10_min = " << fmt17(s.n_grid.log->log10_min) << '\n';
            os << "n_grid.log10_max = " << fmt17(s.n_grid.log->log10_max) << '\n';
            os << "n_grid.points_per_decade = " << s.n_grid.log->points_per_decade << '\n';
            os << "n_grid.perfect_squares = " << (s.n_grid.log->perfect_squares ? "true" : "false") << '\n';
        }
        else
        {
            os << "n_grid = ";
            for (std::size_t i = 0; i < s.n_grid.values.size(); ++i)
                os << (i ? ", " : "") << s.n_grid.values[i];
            os << '\n';
        }
        return os.str();
    }

    std::vector<std::string> builtin_names()
    {
        std::vector<std::string> names;
        for (const auto &[name, text] : builtins())
            names.push_back(name);
        return names;
    }

    std::string builtin_text(std::string_view name)
    {
        const auto it = builtins().find(name);
        if (it == builtins().end())
        {
            std::string known;
            for (const auto &n : builtin_names())
                known += (known.empty() ? "" : ", ") + n;
            throw ValidationError("scenario", "no built-in scenario '" + std::string(name) + "' (known: " + known + ")");
        }
        return it->second;
    }

    Scenario load_scenario(const std::string &reference)
    {
        constexpr std::string_view prefix = "builtin:";
        if (reference.starts_with(prefix))
            return parse_scenario(builtin_text(std::string_view(reference).substr(prefix.size())));
        std::ifstream in(reference);
        if (!in)
            throw ValidationError("scenario", "cannot open '" + reference + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str());
    }
}
