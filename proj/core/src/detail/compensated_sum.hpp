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

#include <cmath>

namespace nfgain::detail
{
    // Neumaier's variant of Kahan summation. Order-dependent by design: callers that need
    // bit-stable results add terms in a fixed order.
    template <class T>
    class CompensatedSum
    {
    public:
        void add(T x) noexcept
        {
            const T t = sum_ + x;
            if (std::abs(sum_) >= std::abs(x))
                carry_ += (sum_ - t) + x;
            else
                carry_ += (x - t) + sum_;
            sum_ = t;
        }

        T value() const noexcept { return sum_ + carry_; }

    private:
        T sum_{};
        T carry_{};
    };
}
