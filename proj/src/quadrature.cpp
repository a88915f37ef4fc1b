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

#include "nfocus/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace nfocus::specfun
{
    namespace
    {
        // Kronrod 15-point abscissae (positive half) and weights, QUADPACK qk15
        constexpr std::array<double, 8> xgk = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        constexpr std::array<double, 8> wgk = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        // Embedded 7-point Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7]
        constexpr std::array<double, 4> wg = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a;
            double b;
            complex value;
            double error;

            bool operator<(const Segment &other) const { return error < other.error; }
        };

        complex checked(const Integrand &f, double t)
        {
            const complex v = f(t);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw DomainError("integrate: integrand is not finite on the interval");
            return v;
        }

        Segment gauss_kronrod(const Integrand &f, double a, double b)
        {
            const double center = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const complex fc = checked(f, center);
            complex kronrod = wgk[7] * fc;
            complex gauss = wg[3] * fc;
            for (int j = 0; j < 7; ++j)
            {
                const double dx = half * xgk[j];
                const complex sum = checked(f, center - dx) + checked(f, center + dx);
                kronrod += wgk[j] * sum;
                if (j % 2 == 1)
                    gauss += wg[j / 2] * sum;
            }
            kronrod *= half;
            gauss *= half;
            return {a, b, kronrod, std::abs(kronrod - gauss)};
        }
    }

    void QuadratureSpec::validate() const
    {
        detail::require(abs_tol > 0.0, "QuadratureSpec: abs_tol must be positive");
        detail::require(rel_tol > 0.0, "QuadratureSpec: rel_tol must be positive");
        detail::require(max_subdivisions >= 1, "QuadratureSpec: max_subdivisions must be at least 1");
    }

    QuadratureResult integrate_detailed(const Integrand &f, double a, double b, const QuadratureSpec &spec)
    {
        spec.validate();
        detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "integrate: requires finite a < b");

        std::priority_queue<Segment> heap;
        Segment first = gauss_kronrod(f, a, b);
        complex total = first.value;
        double total_error = first.error;
        heap.push(first);

        int subdivisions = 0;
        const auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
        while (total_error > tolerance())
        {
            if (subdivisions >= spec.max_subdivisions)
                throw ToleranceError("integrate: tolerance not met within max_subdivisions", total, total_error);

            const Segment worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            const Segment left = gauss_kronrod(f, worst.a, mid);
            const Segment right = gauss_kronrod(f, mid, worst.b);
            total += left.value + right.value - worst.value;
            total_error += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            ++subdivisions;
        }

        // Re-sum from the leaves so the result does not carry the running-update rounding
        complex sum = 0.0;
        double error = 0.0;
        const int intervals = static_cast<int>(heap.size());
        std::vector<Segment> leaves;
        leaves.reserve(heap.size());
        while (!heap.empty())
        {
            leaves.push_back(heap.top());
            heap.pop();
        }
        std::sort(leaves.begin(), leaves.end(), [](const Segment &l, const Segment &r) { return l.a < r.a; });
        for (const auto &s : leaves)
        {
            sum += s.value;
            error += s.error;
        }
        return {sum, error, intervals};
    }
}
