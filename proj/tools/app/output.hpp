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

#include "nfgain/units.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nfgain::app
{
    // One (setup, N) sample. gain_exact holds the gain computed by the row's method, whose
    // nature the provenance names; gain_ff is the far-field counterpart where one exists.
    struct Row
    {
        std::string setup;
        std::int64_t n = 0;
        double total_area_m2 = 0.0;
        double gain_exact = 0.0;
        std::optional<double> gain_ff;
        double snr = 0.0; // linear
        double se = 0.0;
        Provenance provenance = Provenance::exact;
    };

    enum class Format
    {
        csv,
        jsonl
    };

    std::optional<Format> parse_format(std::string_view name) noexcept;

    // %.17g, or the empty string for NaN and infinities.
    std::string format_real(double v);

    void write_rows(std::ostream &os, std::span<const Row> rows, Format format);

    // Writes to a sibling temporary and renames it into place, so readers never see a
    // truncated file.
    void write_file_atomic(const std::filesystem::path &path, const std::string &content);
}
