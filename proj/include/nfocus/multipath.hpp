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

#ifndef NFOCUS_MULTIPATH_HPP
#define NFOCUS_MULTIPATH_HPP

#include "nfocus/fieldmap.hpp"
#include "nfocus/radiator.hpp"

#include <optional>
#include <string_view>
#include <variant>

// Two-ray (direct + single ground reflection) model of the focused near field.
// The grid z axis is the horizontal range L_g between array and receiver; the
// array sits at height h_t and the receiver plane at h_r above the ground.
namespace nfocus::multipath
{
    struct Dielectric
    {
        double permittivity = 1.0; // relative, >= 1
    };

    // Perfect conductor: the permittivity -> infinity limit of the reflection coefficients
    struct Metal
    {
    };

    using Ground = std::variant<Dielectric, Metal>;

    enum class Polarization
    {
        Horizontal, // x-polarised, E_x focus
        Vertical    // z-polarised, E_z focus
    };

    std::string_view to_string(Polarization polarization);
    Polarization polarization_from_string(std::string_view name);

    struct TwoRayEnvironment
    {
        double tx_height = 0.0;        // h_t [m]
        double rx_height = 0.0;        // h_r [m]
        Ground ground = Dielectric{};
        double horizontal_range = 0.0; // L_g [m]

        void validate() const;
    };

    // Gamma = (sin t - X) / (sin t + X), X_h = sqrt(eps - cos^2 t), X_v = X_h / eps, 0 < t <= pi/2
    double reflection_coefficient(double theta, const Ground &ground, Polarization polarization);

    struct RayPair
    {
        double los_length = 0.0;       // L1 [m]
        double reflected_length = 0.0; // L2' + L2'' [m]
        double path_diff = 0.0;        // [m]
        double phase_diff = 0.0;       // 2 pi path_diff / lambda [rad]
        double delay = 0.0;            // path_diff / c [s]
        double grazing_angle = 0.0;    // [rad]
    };

    enum class GrazingAngle
    {
        ElementOffset, // atan( sqrt((ht+hr)^2 + (nd)^2) / sqrt(L1^2 + (nd)^2) )
        Specular       // atan( (ht+hr) / L_g )
    };

    // Ray lengths for the element at lateral offset nd; nd = 0 gives the centre-element rays
    RayPair ray_geometry(const TwoRayEnvironment &env, double element_offset, double wavelength,
                         GrazingAngle angle = GrazingAngle::ElementOffset);

    enum class VerticalNumerator
    {
        ElementPosition, // w_n x_n: with E_z-focus weights this is |n| d times the conjugate phase
        RelativeOffset   // w_n (x_n - x), the exact z-component of the element field
    };

    struct TwoRayOptions
    {
        GrazingAngle angle = GrazingAngle::ElementOffset;
        VerticalNumerator vertical = VerticalNumerator::ElementPosition;
        std::optional<double> reflection_override; // use this Gamma for every element instead of Gamma(theta_n)
    };

    // Two-ray map. Horizontal results are stored in FieldMap::ex, vertical ones in
    // FieldMap::ez; the other component is zero. env.horizontal_range is ignored, each
    // cell uses its own z as L_g. OpenMP-parallel, bit-identical to the serial variant.
    fieldmap::FieldMap two_ray_field(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                     const TwoRayEnvironment &env, const fieldmap::GridSpec &grid,
                                     Polarization polarization, const TwoRayOptions &options = {});

    fieldmap::FieldMap two_ray_field_serial(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                            const TwoRayEnvironment &env, const fieldmap::GridSpec &grid,
                                            Polarization polarization, const TwoRayOptions &options = {});

    struct AxialFocus
    {
        double z = 0.0;
        double level_db = 0.0;      // relative to the strongest sample in the window
        double prominence_db = 0.0; // topographic prominence on the cut
    };

    // Local maxima of a 1-D magnitude cut above min_level_db (relative to the cut maximum)
    // whose prominence is at least min_prominence_db, in ascending coordinate order.
    std::vector<AxialFocus> distinct_foci(const fieldmap::Cut &cut, double min_level_db = -6.0,
                                          double min_prominence_db = 3.0);

    // Peak minus the strongest local maximum outside the contiguous -3 dB main lobe [dB].
    // Empty when the cut has no such local maximum.
    std::optional<double> peak_to_sidelobe_margin_db(const fieldmap::Cut &cut);
}

#endif
