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

#include "nfocus/radiator.hpp"

#include <cmath>
#include <string>

namespace nfocus::radiator
{
    ArrayGeometry::ArrayGeometry(std::size_t n_elements, double spacing, double wavelength)
        : n_elements_(n_elements), spacing_(spacing), wavelength_(wavelength)
    {
        detail::require(n_elements >= 1, "ArrayGeometry: at least one element required");
        detail::require(spacing > 0.0 && std::isfinite(spacing), "ArrayGeometry: spacing must be positive");
        detail::require(wavelength > 0.0 && std::isfinite(wavelength), "ArrayGeometry: wavelength must be positive");

        positions_.resize(n_elements);
        const double center = 0.5 * (static_cast<double>(n_elements) - 1.0);
        for (std::size_t i = 0; i < n_elements; ++i)
            positions_[i] = (static_cast<double>(i) - center) * spacing;
    }

    ArrayGeometry ArrayGeometry::from_frequency(std::size_t n_elements, double spacing, double frequency)
    {
        detail::require(frequency > 0.0 && std::isfinite(frequency), "ArrayGeometry: frequency must be positive");
        return ArrayGeometry(n_elements, spacing, wavelength_from_frequency(frequency));
    }

    double ArrayGeometry::position(std::size_t index) const
    {
        detail::require(index < n_elements_, "ArrayGeometry: element index out of range");
        return positions_[index];
    }

    std::string_view to_string(FocusStrategy strategy)
    {
        return strategy == FocusStrategy::FocusEx ? "ex" : "ez";
    }

    FocusStrategy focus_strategy_from_string(std::string_view name)
    {
        if (name == "ex" || name == "Ex" || name == "FocusEx")
            return FocusStrategy::FocusEx;
        if (name == "ez" || name == "Ez" || name == "FocusEz")
            return FocusStrategy::FocusEz;
        throw DomainError("unknown focus strategy '" + std::string(name) + "' (expected ex or ez)");
    }

    std::vector<double> Excitation::phases_deg() const
    {
        std::vector<double> phases;
        phases.reserve(weights.size());
        for (const complex &w : weights)
        {
            double deg = std::arg(w) * 180.0 / pi;
            deg = std::fmod(deg, 360.0);
            if (deg < 0.0)
                deg += 360.0;
            if (deg >= 360.0)
                deg -= 360.0;
            phases.push_back(deg);
        }
        return phases;
    }

    Excitation conjugate_phases(const ArrayGeometry &geom, double focus_z, FocusStrategy strategy)
    {
        detail::require(focus_z > 0.0 && std::isfinite(focus_z), "conjugate_phases: focus_z must be positive");

        const double k = geom.wavenumber();
        Excitation excitation;
        excitation.strategy = strategy;
        excitation.focus_z = focus_z;
        excitation.weights.reserve(geom.n_elements());
        for (const double x : geom.positions())
        {
            // Path excess over the broadside distance; hypot keeps precision for |x| << z
            const double excess = std::hypot(focus_z, x) - focus_z;
            complex w = std::polar(1.0, k * excess);
            if (strategy == FocusStrategy::FocusEz && x < 0.0)
                w = -w;
            excitation.weights.push_back(w);
        }
        return excitation;
    }

    FieldSample field_at(const ArrayGeometry &geom, const Excitation &excitation, Point point)
    {
        detail::require(point.z > 0.0 && std::isfinite(point.z), "field_at: z must be positive");
        detail::require(std::isfinite(point.x), "field_at: x must be finite");
        detail::require(excitation.weights.size() == geom.n_elements(), "field_at: excitation length does not match the array");

        FieldSample sample{{0.0, 0.0}, {0.0, 0.0}, point};
        kernel::accumulate(geom.positions(), excitation.weights, geom.wavenumber(), point.x, point.z, sample.ex, sample.ez);
        return sample;
    }

    complex physical_prefactor(double wavenumber, double current, double dipole_length)
    {
        return complex(0.0, eta0 * current * dipole_length * wavenumber / (4.0 * pi));
    }

    AxialPeak peak_field_on_axis(const ArrayGeometry &geom, const Excitation &excitation,
                                 double z_min, double z_max, double step)
    {
        detail::require(z_min > 0.0, "peak_field_on_axis: z range must lie in (0, inf)");
        detail::require(z_max > z_min, "peak_field_on_axis: empty z range");
        detail::require(step > 0.0, "peak_field_on_axis: step must be positive");

        const auto count = static_cast<std::size_t>(std::ceil((z_max - z_min) / step)) + 1;
        const double h = (z_max - z_min) / static_cast<double>(count - 1);
        std::vector<double> mag(count);
        for (std::size_t i = 0; i < count; ++i)
        {
            const FieldSample s = field_at(geom, excitation, {0.0, z_min + h * static_cast<double>(i)});
            mag[i] = std::abs(excitation.strategy == FocusStrategy::FocusEx ? s.ex : s.ez);
        }

        std::size_t best = 0;
        bool interior = false;
        for (std::size_t i = 1; i + 1 < count; ++i)
        {
            if (mag[i] > mag[i - 1] && mag[i] >= mag[i + 1] && (!interior || mag[i] > mag[best]))
            {
                best = i;
                interior = true;
            }
        }
        if (!interior)
        {
            for (std::size_t i = 1; i < count; ++i)
                if (mag[i] > mag[best])
                    best = i;
            return {z_min + h * static_cast<double>(best), mag[best], false};
        }

        const double ym = mag[best - 1], y0 = mag[best], yp = mag[best + 1];
        const double denom = ym - 2.0 * y0 + yp;
        const double offset = denom != 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
        return {z_min + h * (static_cast<double>(best) + offset), y0 - 0.25 * (ym - yp) * offset, true};
    }
}
