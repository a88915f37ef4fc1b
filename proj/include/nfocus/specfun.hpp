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

#ifndef NFOCUS_SPECFUN_HPP
#define NFOCUS_SPECFUN_HPP

#include "nfocus/common.hpp"

#include <functional>

// Special functions and adaptive quadrature used by the closed-form beam
// expressions and the dipole coupling model. All functions are pure.
namespace nfocus::specfun
{
    // sin(x)/x, equal to 1 at x = 0
    double sinc(double x);

    // Bessel function of the first kind, order 1. Absolute error below 1e-13 for |x| <= 50.
    double bessel_j1(double x);

    // Struve function of order 1
    double struve_h1(double x);

    // Struve function of order -1, evaluated as 2/pi - H1(x)
    double struve_h_minus1(double x);

    // Sine integral Si(x) = int_0^x sin(t)/t dt. Odd in x.
    double sine_integral(double x);

    // Cosine integral Ci(x) = gamma + ln(x) + int_0^x (cos(t) - 1)/t dt. Requires x > 0.
    double cosine_integral(double x);

    struct QuadratureSpec
    {
        double abs_tol = 1e-10;
        double rel_tol = 1e-8;
        int max_subdivisions = 500;

        void validate() const;
    };

    struct QuadratureResult
    {
        complex value;
        double error_estimate = 0.0;
        int intervals = 0;
    };

    using Integrand = std::function<complex(double)>;

    // Adaptive Gauss-Kronrod (7/15) quadrature of a complex-valued integrand on [a, b].
    // Throws ToleranceError carrying the best estimate when the error bound
    // max(abs_tol, rel_tol * |result|) is not met within max_subdivisions bisections.
    QuadratureResult integrate_detailed(const Integrand &f, double a, double b, const QuadratureSpec &spec = {});

    inline complex integrate(const Integrand &f, double a, double b, const QuadratureSpec &spec = {})
    {
        return integrate_detailed(f, a, b, spec).value;
    }
}

#endif
