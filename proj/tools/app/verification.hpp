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

#include "nfgain/oracle.hpp"
#include "nfgain/units.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace nfgain::app
{
    // Signature of the aggregate off-axis gain under test: (distance, angle, total_area).
    using OffaxisModel = std::function<double(Length, Angle, double)>;

    struct VerifyOptions
    {
        oracle::QuadratureSpec quadrature;
        std::uint64_t seed = oracle::default_seed;
        int element_samples = 1000;
        int additivity_samples = 200;
        int aperture_samples = 60;
        int dominance_samples = 100;
        int identity_samples = 100;
        OffaxisModel offaxis; // empty: the library implementation
    };

    struct VerifyReport
    {
        std::vector<oracle::CheckResult> checks;

        bool passed() const noexcept;
    };

    // Oracle equivalence and invariant suite. Throws ConvergenceError when the quadrature
    // cannot reach its tolerance.
    VerifyReport run_verification(const VerifyOptions &options = {});
}
