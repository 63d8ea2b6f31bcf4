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

#include <array>

namespace nfgain::detail
{
    // 15-point Kronrod abscissae on [-1, 1] (nonnegative half) and the weights of the
    // embedded 7-point Gauss rule, which uses every second abscissa.
    inline constexpr std::array<double, 8> xgk{
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    inline constexpr std::array<double, 8> wgk{
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    inline constexpr std::array<double, 4> wg{
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    struct Rule
    {
        std::array<double, 15> nodes{};
        std::array<double, 15> kronrod{};
        std::array<double, 15> gauss{}; // zero on Kronrod-only nodes
    };

    constexpr Rule make_rule()
    {
        Rule r;
        for (int i = 0; i < 7; ++i)
        {
            r.nodes[i] = -xgk[i];
            r.nodes[14 - i] = xgk[i];
            r.kronrod[i] = r.kronrod[14 - i] = wgk[i];
            if (i % 2 == 1)
                r.gauss[i] = r.gauss[14 - i] = wg[i / 2];
        }
        r.nodes[7] = 0.0;
        r.kronrod[7] = wgk[7];
        r.gauss[7] = wg[3];
        return r;
    }

    inline constexpr Rule gk15 = make_rule();
}
