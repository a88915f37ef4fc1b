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

#include <array>
#include <cmath>
#include <limits>

namespace nfocus::specfun
{
    namespace
    {
        constexpr double euler_gamma = 0.57721566490153286061;
        constexpr double two_over_pi = 2.0 / pi;

        template <std::size_t N>
        struct GaussLegendre
        {
            std::array<double, N> nodes{};
            std::array<double, N> weights{};
        };

        // Nodes and weights on [-1, 1] by Newton iteration on P_N
        template <std::size_t N>
        GaussLegendre<N> make_gauss_legendre()
        {
            GaussLegendre<N> rule;
            const int n = static_cast<int>(N);
            for (int i = 0; i < (n + 1) / 2; ++i)
            {
                double z = std::cos(pi * (i + 0.75) / (n + 0.5));
                double dp = 0.0;
                for (int iter = 0; iter < 100; ++iter)
                {
                    double p0 = 1.0, p1 = 0.0;
                    for (int j = 1; j <= n; ++j)
                    {
                        const double p2 = p1;
                        p1 = p0;
                        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
                    }
                    dp = n * (z * p0 - p1) / (z * z - 1.0);
                    const double dz = p0 / dp;
                    z -= dz;
                    if (std::abs(dz) < 1e-16)
                        break;
                }
                const double w = 2.0 / ((1.0 - z * z) * dp * dp);
                rule.nodes[i] = -z;
                rule.nodes[n - 1 - i] = z;
                rule.weights[i] = w;
                rule.weights[n - 1 - i] = w;
            }
            return rule;
        }

        const GaussLegendre<16> &gl16()
        {
            static const GaussLegendre<16> rule = make_gauss_legendre<16>();
            return rule;
        }

        double j1_series(double x)
        {
            const double h = 0.5 * x;
            const double q = -h * h;
            double term = h;
            double sum = term;
            for (int k = 1; k < 200; ++k)
            {
                term *= q / (k * (k + 1.0));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return sum;
        }

        // Miller backward recurrence normalised with J0 + 2 sum J_2k = 1 (x > 0)
        double j1_miller(double x)
        {
            const int start = 2 * (static_cast<int>(x + 60.0 + 5.0 * std::sqrt(x)) / 2);
            double above = 0.0;
            double current = 1e-30;
            double norm = 2.0 * current;
            double j1 = 0.0;
            for (int k = start; k >= 1; --k)
            {
                const double below = (2.0 * k / x) * current - above;
                above = current;
                current = below;
                const int order = k - 1;
                if (order == 1)
                    j1 = current;
                if (order > 0 && order % 2 == 0)
                    norm += 2.0 * current;
                if (std::abs(current) > 1e250)
                {
                    current *= 1e-250;
                    above *= 1e-250;
                    norm *= 1e-250;
                    j1 *= 1e-250;
                }
            }
            norm += current;
            return j1 / norm;
        }

        double h1_series(double x)
        {
            const double h2 = 0.25 * x * x;
            // first term (x/2)^2 / (Gamma(3/2) Gamma(5/2))
            double term = h2 / (0.375 * pi);
            double sum = term;
            for (int k = 0; k < 300; ++k)
            {
                term *= -h2 / ((k + 1.5) * (k + 2.5));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return sum;
        }

        // H_{-1}(x) = (2/pi) int_0^{pi/2} sin(t) cos(x sin(t)) dt, composite 16-point Gauss-Legendre
        double h_minus1_quadrature(double x)
        {
            const auto &rule = gl16();
            const int panels = std::max(8, static_cast<int>(std::ceil(std::abs(x) / 4.0)));
            const double width = 0.5 * pi / panels;
            double sum = 0.0;
            for (int p = 0; p < panels; ++p)
            {
                const double mid = (p + 0.5) * width;
                double panel = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                {
                    const double t = mid + 0.5 * width * rule.nodes[i];
                    const double s = std::sin(t);
                    panel += rule.weights[i] * s * std::cos(x * s);
                }
                sum += 0.5 * width * panel;
            }
            return two_over_pi * sum;
        }

        struct CiSi
        {
            double ci;
            double si;
        };

        // x > 0
        CiSi cisi(double x)
        {
            constexpr double fpmin = std::numeric_limits<double>::min() * 4.0;
            constexpr double eps = std::numeric_limits<double>::epsilon();
            if (x > 2.0)
            {
                // Continued fraction for E1(ix), modified Lentz
                complex b(1.0, x);
                complex c(1.0 / fpmin, 0.0);
                complex d = 1.0 / b;
                complex h = d;
                for (int i = 2; i < 1000; ++i)
                {
                    const double a = -static_cast<double>(i - 1) * (i - 1);
                    b += 2.0;
                    d = 1.0 / (a * d + b);
                    c = b + a / c;
                    const complex del = c * d;
                    h *= del;
                    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
                        break;
                }
                h *= complex(std::cos(x), -std::sin(x));
                return {-h.real(), 0.5 * pi + h.imag()};
            }

            const double x2 = x * x;
            double si = x;
            double term = x; // (-1)^k x^(2k+1) / (2k+1)!
            for (int k = 1; k < 100; ++k)
            {
                term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
                const double add = term / (2.0 * k + 1.0);
                si += add;
                if (std::abs(add) < 1e-17 * std::abs(si))
                    break;
            }
            double ci = euler_gamma + std::log(x);
            term = 1.0; // (-1)^k x^(2k) / (2k)!
            for (int k = 1; k < 100; ++k)
            {
                term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
                const double add = term / (2.0 * k);
                ci += add;
                if (std::abs(add) < 1e-17 * std::abs(ci))
                    break;
            }
            return {ci, si};
        }
    }

    double sinc(double x)
    {
        if (std::abs(x) < 1e-4)
        {
            const double x2 = x * x;
            return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
        }
        return std::sin(x) / x;
    }

    double bessel_j1(double x)
    {
        const double ax = std::abs(x);
        if (ax == 0.0)
            return 0.0;
        const double value = ax < 8.0 ? j1_series(ax) : j1_miller(ax);
        return x < 0.0 ? -value : value;
    }

    double struve_h1(double x)
    {
        const double ax = std::abs(x);
        if (ax <= 12.0)
            return h1_series(ax);
        return two_over_pi - h_minus1_quadrature(ax);
    }

    double struve_h_minus1(double x)
    {
        return two_over_pi - struve_h1(x);
    }

    double sine_integral(double x)
    {
        if (x == 0.0)
            return 0.0;
        const double value = cisi(std::abs(x)).si;
        return x < 0.0 ? -value : value;
    }

    double cosine_integral(double x)
    {
        if (!(x > 0.0))
            throw DomainError("cosine_integral: argument must be positive");
        return cisi(x).ci;
    }
}
