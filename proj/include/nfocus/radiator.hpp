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

#ifndef NFOCUS_RADIATOR_HPP
#define NFOCUS_RADIATOR_HPP

#include "nfocus/common.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nfocus::radiator
{
    // Collinear array of x-directed Hertzian dipoles on the x-axis, centred at the origin.
    // Even N: elements at +-(m + 1/2) d, no element at the origin. Odd N: elements at m d.
    class ArrayGeometry
    {
    public:
        ArrayGeometry(std::size_t n_elements, double spacing, double wavelength);

        static ArrayGeometry from_frequency(std::size_t n_elements, double spacing, double frequency);

        std::size_t n_elements() const { return n_elements_; }
        double spacing() const { return spacing_; }
        double wavelength() const { return wavelength_; }
        double frequency() const { return speed_of_light / wavelength_; }
        double wavenumber() const { return wavenumber_from_wavelength(wavelength_); }
        double aperture_length() const { return static_cast<double>(n_elements_) * spacing_; }

        double position(std::size_t index) const;
        std::span<const double> positions() const { return positions_; }

    private:
        std::size_t n_elements_;
        double spacing_;
        double wavelength_;
        std::vector<double> positions_;
    };

    enum class FocusStrategy
    {
        FocusEx, // co-phase the x-polarised component at the focus
        FocusEz  // co-phase the z-polarised component: FocusEx plus pi on the x < 0 half
    };

    std::string_view to_string(FocusStrategy strategy);
    FocusStrategy focus_strategy_from_string(std::string_view name);

    struct Excitation
    {
        std::vector<complex> weights; // one per element, ordered like ArrayGeometry::positions()
        FocusStrategy strategy = FocusStrategy::FocusEx;
        double focus_z = 0.0;

        // Element phases in degrees, wrapped to [0, 360)
        std::vector<double> phases_deg() const;
    };

    struct FieldSample
    {
        complex ex;
        complex ez;
        Point position;

        double magnitude() const { return std::sqrt(std::norm(ex) + std::norm(ez)); }
    };

    // Conjugate-phase excitation focusing at (0, focus_z). Unit amplitudes.
    Excitation conjugate_phases(const ArrayGeometry &geom, double focus_z, FocusStrategy strategy);

    // Normalised-unit field at a point (z > 0):
    //   ex = sum w_n z^2 exp(-jk r_n) / r_n^3
    //   ez = sum w_n (x_n - x) z exp(-jk r_n) / r_n^3,   r_n^2 = z^2 + (x_n - x)^2
    FieldSample field_at(const ArrayGeometry &geom, const Excitation &excitation, Point point);

    // Constant j eta I0 l k / (4 pi) that converts normalised units to V/m
    complex physical_prefactor(double wavenumber, double current, double dipole_length);

    struct AxialPeak
    {
        double z = 0.0;
        double magnitude = 0.0;
        bool interior = false; // false: no interior local maximum, global argmax returned
    };

    // Focal peak along x = 0 in [z_min, z_max] sampled every `step`: the largest
    // interior local maximum of |ex| (FocusEx) or |ez| (FocusEz), refined by a parabola.
    AxialPeak peak_field_on_axis(const ArrayGeometry &geom, const Excitation &excitation,
                                 double z_min, double z_max, double step);

    namespace kernel
    {
        // Per-element contributions shared by every map evaluator. Keeping the arithmetic
        // in one place is what makes serial, parallel and two-ray (Gamma = 0) maps bit-identical.
        inline complex propagate(double wavenumber, double zsq, double dx, double &r3)
        {
            const double rsq = zsq + dx * dx;
            const double r = std::sqrt(rsq);
            r3 = rsq * r;
            return std::polar(1.0, -wavenumber * r);
        }

        inline void accumulate(std::span<const double> positions, std::span<const complex> weights,
                               double wavenumber, double x, double z, complex &ex, complex &ez)
        {
            const double zsq = z * z;
            for (std::size_t n = 0; n < positions.size(); ++n)
            {
                const double dx = positions[n] - x;
                double r3 = 0.0;
                const complex wave = weights[n] * propagate(wavenumber, zsq, dx, r3);
                ex += wave * (zsq / r3);
                ez += wave * (dx * z / r3);
            }
        }
    }
}

#endif
