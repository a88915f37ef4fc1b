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

#ifndef NFOCUS_COMMON_HPP
#define NFOCUS_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nfocus
{
    using complex = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;

    // Propagation speed used for every frequency <-> wavelength conversion [m/s].
    // 6 GHz maps to a wavelength of exactly 0.05 m.
    inline constexpr double speed_of_light = 3.0e8;

    // Free-space wave impedance [Ohm]
    inline constexpr double eta0 = 376.73;

    inline double wavelength_from_frequency(double frequency) { return speed_of_light / frequency; }
    inline double wavenumber_from_wavelength(double wavelength) { return 2.0 * pi / wavelength; }

    // Field component selector
    enum class Component
    {
        Ex,
        Ez,
        Total
    };

    // Position in the observation plane: x along the array axis, z broadside [m]
    struct Point
    {
        double x = 0.0;
        double z = 0.0;
    };

    // Input outside the mathematical or physical domain of an operation
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // An iterative method could not reach the requested tolerance
    class ToleranceError : public std::runtime_error
    {
    public:
        ToleranceError(const std::string &what, complex best_estimate, double error_estimate)
            : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

        complex best_estimate() const { return best_estimate_; }
        double error_estimate() const { return error_estimate_; }

    private:
        complex best_estimate_;
        double error_estimate_;
    };

    namespace detail
    {
        inline void require(bool condition, const std::string &message)
        {
            if (!condition)
                throw DomainError(message);
        }
    }
}

#endif
