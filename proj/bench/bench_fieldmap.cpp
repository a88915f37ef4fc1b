// SPDX-License-Identifier: Apache-2.0
//
// nfocus: near-field focusing toolkit for collinear dipole arrays
// Copyright (C) 2026 The nfocus Authors
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

// Serial reference vs OpenMP kernels on the default map grid.

#include "nfocus/fieldmap.hpp"
#include "nfocus/multipath.hpp"
#include "nfocus/radiator.hpp"

#include <benchmark/benchmark.h>

using namespace nfocus;

namespace
{
    constexpr double lambda = 0.05;

    struct Setup
    {
        radiator::ArrayGeometry geom;
        radiator::Excitation exc;
        fieldmap::GridSpec grid{-5 * lambda, 5 * lambda, 0.5 * lambda, 40 * lambda, 101, 396};
        multipath::TwoRayEnvironment env{4 * lambda, 4 * lambda, multipath::Dielectric{5.0}, 20 * lambda};

        explicit Setup(std::size_t n)
            : geom(n, lambda / 2, lambda),
              exc(radiator::conjugate_phases(geom, 20 * lambda, radiator::FocusStrategy::FocusEx))
        {
        }
    };

    void map_serial(benchmark::State &state)
    {
        const Setup s(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(fieldmap::evaluate_map_serial(s.geom, s.exc, s.grid));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(s.grid.size()) * state.range(0));
    }

    void map_parallel(benchmark::State &state)
    {
        const Setup s(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(fieldmap::evaluate_map(s.geom, s.exc, s.grid));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(s.grid.size()) * state.range(0));
    }

    void two_ray_serial(benchmark::State &state)
    {
        const Setup s(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(
                multipath::two_ray_field_serial(s.geom, s.exc, s.env, s.grid, multipath::Polarization::Horizontal));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(s.grid.size()) * state.range(0));
    }

    void two_ray_parallel(benchmark::State &state)
    {
        const Setup s(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(
                multipath::two_ray_field(s.geom, s.exc, s.env, s.grid, multipath::Polarization::Horizontal));
        state.SetItemsProcessed(state.iterations() * static_cast<long>(s.grid.size()) * state.range(0));
    }
}

BENCHMARK(map_serial)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(map_parallel)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(two_ray_serial)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(two_ray_parallel)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
