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

#ifndef NFOCUS_POLARIZATION_HPP
#define NFOCUS_POLARIZATION_HPP

#include "nfocus/fieldmap.hpp"
#include "nfocus/radiator.hpp"

#include <span>
#include <vector>

// Circular polarisation from two coincident collinear arrays, one focused for E_x
// and one for E_z. On axis the two components are in phase quadrature, so the
// axial ratio reduces to the ratio of the focal amplitudes.
namespace nfocus::polarization
{
    // Largest axial ratio that still counts as circular polarisation
    inline constexpr double max_cp_axial_ratio = 2.0;

    struct AxialRatioResult
    {
        std::size_t n_elements = 0;
        double focus_z = 0.0;
        double ex_peak = 0.0;
        double ez_peak = 0.0;
        double axial_ratio = 0.0; // >= 1; +inf when one component vanishes
        bool is_cp = false;
    };

    // AR from two focal amplitudes (both >= 0, not both zero)
    AxialRatioResult axial_ratio(double ex_peak, double ez_peak);

    AxialRatioResult axial_ratio_at_focus(const radiator::ArrayGeometry &geom, double focus_z);

    // AR(N) for each N in n_list at fixed spacing and wavelength
    std::vector<AxialRatioResult> axial_ratio_sweep(double spacing, double wavelength, double focus_z,
                                                    std::span<const std::size_t> n_list);

    // Smallest N with AR <= 2, by exponential then binary search over the
    // non-increasing AR(N). Throws ToleranceError if n_max is reached first.
    std::size_t min_elements_for_cp(double spacing, double wavelength, double focus_z, std::size_t n_max = 1000000);

    // Superposition map: ex from the E_x-focused array, ez from the E_z-focused array;
    // Component::Total of the result is the circularly polarised field magnitude.
    fieldmap::FieldMap cp_field_map(const radiator::ArrayGeometry &geom, double focus_z, const fieldmap::GridSpec &grid);
}

#endif
