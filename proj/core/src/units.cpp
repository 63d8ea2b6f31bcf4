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

#include "nfgain/units.hpp"
#include "nfgain/errors.hpp"

#include <cmath>
#include <string>

namespace nfgain
{
    namespace
    {
        std::string join_errors(const std::vector<FieldError> &errors)
        {
            std::string what;
            for (const auto &e : errors)
            {
                if (!what.empty())
                    what += "; ";
                what += e.path + ": " + e.message;
            }
            return what.empty() ? std::string("validation failed") : what;
        }
    }

    ValidationError::ValidationError(std::vector<FieldError> errors)
        : std::invalid_argument(join_errors(errors)), errors_(std::move(errors))
    {
    }

    ValidationError::ValidationError(std::string path, std::string message)
        : ValidationError(std::vector<FieldError>{{std::move(path), std::move(message)}})
    {
    }

    Length::Length(double meters) : value_(meters)
    {
        if (!std::isfinite(meters) || meters < 0.0)
            throw DomainError("length must be finite and non-negative, got " + std::to_string(meters));
    }

    Angle::Angle(double radians) : value_(radians)
    {
        if (!std::isfinite(radians))
            throw DomainError("angle must be finite");
    }

    std::string_view to_string(Provenance p) noexcept
    {
        switch (p)
        {
        case Provenance::exact:
            return "exact";
        case Provenance::far_field:
            return "far_field";
        case Provenance::oracle:
            return "oracle";
        case Provenance::upper_bound:
            return "upper_bound";
        case Provenance::mirror_limit:
            return "mirror_limit";
        }
        return "unknown";
    }

    double to_db(double linear)
    {
        return 10.0 * std::log10(linear);
    }

    double from_db(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double wavelength_from_frequency(double frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw DomainError("frequency must be positive");
        return speed_of_light / frequency_hz;
    }
}
