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

#include "nfocus/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nfocus::polarization
{
    AxialRatioResult axial_ratio(double ex_peak, double ez_peak)
    {
        detail::require(ex_peak >= 0.0 && ez_peak >= 0.0, "axial_ratio: peaks must be non-negative");
        detail::require(ex_peak > 0.0 || ez_peak > 0.0, "axial_ratio: both components vanish");
        AxialRatioResult r;
        r.ex_peak = ex_peak;
        r.ez_peak = ez_peak;
        const double hi = std::max(ex_peak, ez_peak);
        const double lo = std::min(ex_peak, ez_peak);
        r.axial_ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
        r.is_cp = r.axial_ratio <= max_cp_axial_ratio;
        return r;
    }

    AxialRatioResult axial_ratio_at_focus(const radiator::ArrayGeometry &geom, double focus_z)
    {
        detail::require(focus_z > 0.0, "axial_ratio_at_focus: focus_z must be positive");
        const Point focus{0.0, focus_z};
        const auto ex_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEx);
        const auto ez_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEz);
        AxialRatioResult r = axial_ratio(std::abs(radiator::field_at(geom, ex_exc, focus).ex),
                                         std::abs(radiator::field_at(geom, ez_exc, focus).ez));
        r.n_elements = geom.n_elements();
        r.focus_z = focus_z;
        return r;
    }

    std::vector<AxialRatioResult> axial_ratio_sweep(double spacing, double wavelength, double focus_z,
                                                    std::span<const std::size_t> n_list)
    {
        std::vector<AxialRatioResult> out;
        out.reserve(n_list.size());
        for (const std::size_t n : n_list)
            out.push_back(axial_ratio_at_focus(radiator::ArrayGeometry(n, spacing, wavelength), focus_z));
        return out;
    }

    std::size_t min_elements_for_cp(double spacing, double wavelength, double focus_z, std::size_t n_max)
    {
        detail::require(focus_z > 0.0, "min_elements_for_cp: focus_z must be positive");
        const auto cp = [&](std::size_t n) {
            return axial_ratio_at_focus(radiator::ArrayGeometry(n, spacing, wavelength), focus_z).is_cp;
        };

        std::size_t hi = 2;
        while (!cp(hi))
        {
            if (hi >= n_max)
                throw ToleranceError("min_elements_for_cp: no circular polarisation up to n_max elements", 0.0, 0.0);
            hi = std::min(hi * 2, n_max);
        }
        std::size_t lo = hi / 2; // AR(lo) > 2 or lo == 1 (AR infinite)
        while (hi - lo > 1)
        {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (cp(mid))
                hi = mid;
            else
                lo = mid;
        }
        return hi;
    }

    fieldmap::FieldMap cp_field_map(const radiator::ArrayGeometry &geom, double focus_z, const fieldmap::GridSpec &grid)
    {
        const auto ex_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEx);
        const auto ez_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEz);
        fieldmap::FieldMap map = fieldmap::evaluate_map(geom, ex_exc, grid);
        const fieldmap::FieldMap ez_map = fieldmap::evaluate_map(geom, ez_exc, grid);
        map.ez = ez_map.ez;
        return map;
    }
}
