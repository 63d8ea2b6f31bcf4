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

#include "nfgain/nfgain.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace nfgain;

namespace
{
    constexpr double iso_area = 0.01 / (4.0 * pi);
    const TerminalPlacement source{Length{25}, Angle{pi / 6}};
    const TerminalPlacement destination{Length{2.5}, Angle{-pi / 6}};

    void BM_ElementGain(benchmark::State &state)
    {
        double x = 0.0;
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(element_gain({0.3, -0.2, 4.0}, {x, 0.5, 0.0}, Length{0.03}));
            x += 1e-6;
        }
    }
    BENCHMARK(BM_ElementGain);

    void BM_OffaxisGain(benchmark::State &state)
    {
        double area = 1.0;
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(offaxis_array_gain(Length{25}, Angle{0.5}, area));
            area *= 1.0000001;
        }
    }
    BENCHMARK(BM_OffaxisGain);

    void BM_SynthesizeChannel(benchmark::State &state)
    {
        const ArrayGeometry g(state.range(0), iso_area);
        for (auto _ : state)
            benchmark::DoNotOptimize(synthesize_channel(source, g, Length{0.1}));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }
    BENCHMARK(BM_SynthesizeChannel)->Arg(100)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

    void BM_QuadratureGain(benchmark::State &state)
    {
        const oracle::QuadratureSpec spec{std::pow(10.0, -static_cast<double>(state.range(0))), 1 << 20};
        for (auto _ : state)
            benchmark::DoNotOptimize(oracle::quadrature_gain({1.0, 2.0, 1.5}, {0.0, 0.0, 0.0}, Length{3.0}, spec));
    }
    BENCHMARK(BM_QuadratureGain)->DenseRange(6, 12, 3)->Unit(benchmark::kMicrosecond);

    void BM_SnrIrs(benchmark::State &state)
    {
        const ArrayGeometry g(state.range(0), iso_area);
        const RadioConfig radio;
        for (auto _ : state)
            benchmark::DoNotOptimize(snr_irs(source, destination, g, radio));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }
    BENCHMARK(BM_SnrIrs)->Arg(100)->Arg(10'000)->Arg(250'000)->Unit(benchmark::kMillisecond);
}
BENCHMARK_MAIN();
