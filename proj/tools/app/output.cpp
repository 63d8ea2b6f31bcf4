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

#include "output.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace nfgain::app
{
    std::optional<Format> parse_format(std::string_view name) noexcept
    {
        if (name == "csv")
            return Format::csv;
        if (name == "jsonl")
            return Format::jsonl;
        return std::nullopt;
    }

    std::string format_real(double v)
    {
        if (!std::isfinite(v))
            return {};
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    void write_rows(std::ostream &os, std::span<const Row> rows, Format format)
    {
        if (format == Format::csv)
        {
            os << "setup,N,total_area_m2,gain_exact,gain_ff,snr_db,se_bps_hz,provenance\n";
            for (const Row &r : rows)
                os << r.setup << ',' << r.n << ',' << format_real(r.total_area_m2) << ',' << format_real(r.gain_exact)
                   << ',' << (r.gain_ff ? format_real(*r.gain_ff) : "") << ',' << format_real(to_db(r.snr)) << ','
                   << format_real(r.se) << ',' << to_string(r.provenance) << '\n';
            return;
        }
        auto real_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
        for (const Row &r : rows)
        {
            nlohmann::ordered_json j;
            j["setup"] = r.setup;
            j["N"] = r.n;
            j["total_area_m2"] = real_or_null(r.total_area_m2);
            j["gain_exact"] = real_or_null(r.gain_exact);
            j["gain_ff"] = r.gain_ff ? real_or_null(*r.gain_ff) : nlohmann::json(nullptr);
            j["snr_db"] = real_or_null(to_db(r.snr));
            j["se_bps_hz"] = real_or_null(r.se);
            j["provenance"] = std::string(to_string(r.provenance));
            os << j.dump() << '\n';
        }
    }

    void write_file_atomic(const std::filesystem::path &path, const std::string &content)
    {
        std::filesystem::path tmp = path;
        tmp += ".partial";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + tmp.string() + "'");
            out << content;
            out.flush();
            if (!out)
            {
                std::error_code ignored;
                std::filesystem::remove(tmp, ignored);
                throw std::runtime_error("write to '" + tmp.string() + "' failed");
            }
        }
        std::filesystem::rename(tmp, path);
    }
}
