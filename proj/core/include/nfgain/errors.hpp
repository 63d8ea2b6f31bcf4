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

#include <stdexcept>
#include <string>
#include <vector>

namespace nfgain
{
    // Input outside the domain of a formula (zero distance, source in the array plane, ...).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Adaptive quadrature exhausted its subdivision budget before reaching the tolerance.
    class ConvergenceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // One offending field of a scenario or configuration, e.g. "destination.distance_m".
    struct FieldError
    {
        std::string path;
        std::string message;
    };

    class ValidationError : public std::invalid_argument
    {
    public:
        explicit ValidationError(std::vector<FieldError> errors);
        ValidationError(std::string path, std::string message);

        const std::vector<FieldError> &errors() const noexcept { return errors_; }

    private:
        std::vector<FieldError> errors_;
    };
}
