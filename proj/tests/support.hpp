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

#ifndef NFOCUS_TESTS_SUPPORT_HPP
#define NFOCUS_TESTS_SUPPORT_HPP

#include "nfocus/common.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace testing
{
    inline constexpr double lambda = 0.05; // 6 GHz
    inline constexpr double frequency = 6.0e9;
    inline constexpr double half_wave = 0.025;

    // Fixed-seed generator so property tests are reproducible
    inline std::mt19937_64 rng(std::uint64_t salt = 0)
    {
        return std::mt19937_64(0x6e666f637573ULL ^ salt);
    }

    inline double uniform(std::mt19937_64 &g, double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(g);
    }

    inline bool close(double a, double b, double abs_tol, double rel_tol = 0.0)
    {
        return std::abs(a - b) <= std::max(abs_tol, rel_tol * std::max(std::abs(a), std::abs(b)));
    }
}

#endif
