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

#include "nfocus/multipath.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace nfocus::multipath
{
    std::string_view to_string(Polarization polarization)
    {
        return polarization == Polarization::Horizontal ? "horizontal" : "vertical";
    }

    Polarization polarization_from_string(std::string_view name)
    {
        if (name == "horizontal" || name == "h")
            return Polarization::Horizontal;
        if (name == "vertical" || name == "v")
            return Polarization::Vertical;
        throw DomainError("unknown polarization '" + std::string(name) + "' (expected horizontal or vertical)");
    }

    namespace
    {
        void validate_ground(const Ground &ground)
        {
            if (const auto *d = std::get_if<Dielectric>(&ground))
                detail::require(d->permittivity >= 1.0 && std::isfinite(d->permittivity),
                                "ground permittivity must be finite and >= 1");
        }
    }

    void TwoRayEnvironment::validate() const
    {
        detail::require(tx_height > 0.0 && std::isfinite(tx_height), "TwoRayEnvironment: tx_height must be positive");
        detail::require(rx_height > 0.0 && std::isfinite(rx_height), "TwoRayEnvironment: rx_height must be positive");
        detail::require(horizontal_range > 0.0 && std::isfinite(horizontal_range),
                        "TwoRayEnvironment: horizontal_range must be positive");
        validate_ground(ground);
    }

    double reflection_coefficient(double theta, const Ground &ground, Polarization polarization)
    {
        detail::require(theta > 0.0 && theta <= 0.5 * pi, "reflection_coefficient: theta must lie in (0, pi/2]");
        validate_ground(ground);
        if (std::holds_alternative<Metal>(ground))
            return polarization == Polarization::Horizontal ? -1.0 : 1.0;

        const double eps = std::get<Dielectric>(ground).permittivity;
        const double s = std::sin(theta);
        // eps - cos^2 = (eps - 1) + sin^2; exact zero reflection for eps == 1
        double x = std::sqrt((eps - 1.0) + s * s);
        if (polarization == Polarization::Vertical)
            x /= eps;
        return (s - x) / (s + x);
    }

    RayPair ray_geometry(const TwoRayEnvironment &env, double element_offset, double wavelength, GrazingAngle angle)
    {
        env.validate();
        detail::require(wavelength > 0.0, "ray_geometry: wavelength must be positive");
        const double dh = env.tx_height - env.rx_height;
        const double sh = env.tx_height + env.rx_height;
        const double lg = env.horizontal_range;
        const double nd2 = element_offset * element_offset;

        RayPair rays;
        rays.los_length = std::sqrt(dh * dh + lg * lg + nd2);
        rays.reflected_length = std::sqrt(sh * sh + lg * lg + nd2);
        rays.path_diff = rays.reflected_length - rays.los_length;
        rays.phase_diff = 2.0 * pi * rays.path_diff / wavelength;
        rays.delay = rays.path_diff / speed_of_light;
        if (angle == GrazingAngle::ElementOffset)
        {
            const double centre_los_sq = dh * dh + lg * lg;
            rays.grazing_angle = std::atan(std::sqrt(sh * sh + nd2) / std::sqrt(centre_los_sq + nd2));
        }
        else
            rays.grazing_angle = std::atan(sh / lg);
        return rays;
    }

    namespace
    {
        fieldmap::FieldMap two_ray_impl(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                        const TwoRayEnvironment &env, const fieldmap::GridSpec &grid,
                                        Polarization polarization, const TwoRayOptions &options, bool parallel)
        {
            grid.validate();
            detail::require(env.tx_height > 0.0 && env.rx_height > 0.0, "two_ray_field: heights must be positive");
            validate_ground(env.ground);
            detail::require(excitation.weights.size() == geom.n_elements(),
                            "two_ray_field: excitation length does not match the array");

            const std::size_t n_el = geom.n_elements();
            const auto positions = geom.positions();
            const auto &weights = excitation.weights;
            const double k = geom.wavenumber();
            const double dh = env.tx_height - env.rx_height;
            const double sh = env.tx_height + env.rx_height;
            const double dh2 = dh * dh;
            const double sh2 = sh * sh;

            // Gamma depends on the range (grid z) and the element, not on x
            std::vector<double> gamma(grid.nz * n_el);
            const auto nz = static_cast<std::int64_t>(grid.nz);
#pragma omp parallel for schedule(static) if (parallel)
            for (std::int64_t j = 0; j < nz; ++j)
            {
                const double lg = grid.z(static_cast<std::size_t>(j));
                for (std::size_t n = 0; n < n_el; ++n)
                {
                    double g = 0.0;
                    if (options.reflection_override)
                        g = *options.reflection_override;
                    else
                    {
                        const double nd2 = positions[n] * positions[n];
                        const double theta = options.angle == GrazingAngle::ElementOffset
                                                 ? std::atan(std::sqrt(sh2 + nd2) / std::sqrt(dh2 + lg * lg + nd2))
                                                 : std::atan(sh / lg);
                        g = reflection_coefficient(theta, env.ground, polarization);
                    }
                    gamma[static_cast<std::size_t>(j) * n_el + n] = g;
                }
            }

            fieldmap::FieldMap map;
            map.grid = grid;
            map.ex.assign(grid.size(), complex(0.0, 0.0));
            map.ez.assign(grid.size(), complex(0.0, 0.0));
            const bool horizontal = polarization == Polarization::Horizontal;
            const bool element_position = options.vertical == VerticalNumerator::ElementPosition;

            const auto cells = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static) if (parallel)
            for (std::int64_t c = 0; c < cells; ++c)
            {
                const auto cell = static_cast<std::size_t>(c);
                const std::size_t i = cell / grid.nz;
                const std::size_t j = cell % grid.nz;
                const double x = grid.x(i);
                const double lg = grid.z(j);
                const double los_sq = dh2 + lg * lg;
                const double refl_sq = sh2 + lg * lg;
                const double los_len = std::sqrt(los_sq);
                const double refl_len = std::sqrt(refl_sq);
                const double *g = &gamma[j * n_el];

                complex acc(0.0, 0.0);
                for (std::size_t n = 0; n < n_el; ++n)
                {
                    const double dx = positions[n] - x;
                    double r3_los = 0.0, r3_refl = 0.0;
                    const complex los = weights[n] * radiator::kernel::propagate(k, los_sq, dx, r3_los);
                    const complex refl = weights[n] * radiator::kernel::propagate(k, refl_sq, dx, r3_refl);
                    if (horizontal)
                        acc += los * (los_sq / r3_los) + g[n] * (refl * (refl_sq / r3_refl));
                    else
                    {
                        const double lateral = element_position ? positions[n] : dx;
                        acc += los * (lateral * los_len / r3_los) + g[n] * (refl * (lateral * refl_len / r3_refl));
                    }
                }
                if (horizontal)
                    map.ex[cell] = acc;
                else
                    map.ez[cell] = acc;
            }
            return map;
        }
    }

    fieldmap::FieldMap two_ray_field(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                     const TwoRayEnvironment &env, const fieldmap::GridSpec &grid,
                                     Polarization polarization, const TwoRayOptions &options)
    {
        return two_ray_impl(geom, excitation, env, grid, polarization, options, true);
    }

    fieldmap::FieldMap two_ray_field_serial(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                            const TwoRayEnvironment &env, const fieldmap::GridSpec &grid,
                                            Polarization polarization, const TwoRayOptions &options)
    {
        return two_ray_impl(geom, excitation, env, grid, polarization, options, false);
    }

    std::vector<AxialFocus> distinct_foci(const fieldmap::Cut &cut, double min_level_db, double min_prominence_db)
    {
        const auto &m = cut.magnitude;
        detail::require(m.size() == cut.coordinate.size() && m.size() >= 3, "distinct_foci: cut needs at least 3 samples");
        const double top = *std::max_element(m.begin(), m.end());
        detail::require(top > 0.0, "distinct_foci: cut is identically zero");
        const auto db = [&](double v) { return 20.0 * std::log10(v / top); };

        std::vector<AxialFocus> out;
        for (std::size_t i = 1; i + 1 < m.size(); ++i)
        {
            if (!(m[i] > m[i - 1] && m[i] >= m[i + 1]))
                continue;
            const double level = db(m[i]);
            if (level < min_level_db)
                continue;
            // Lowest point on each side before higher ground (or the cut edge)
            double left_base = m[i];
            for (std::size_t l = i; l-- > 0;)
            {
                if (m[l] > m[i])
                    break;
                left_base = std::min(left_base, m[l]);
            }
            double right_base = m[i];
            for (std::size_t r = i + 1; r < m.size(); ++r)
            {
                if (m[r] > m[i])
                    break;
                right_base = std::min(right_base, m[r]);
            }
            const double base = std::max(left_base, right_base);
            const double prominence = base > 0.0 ? level - db(base) : HUGE_VAL;
            if (prominence >= min_prominence_db)
                out.push_back({cut.coordinate[i], level, prominence});
        }
        return out;
    }

    std::optional<double> peak_to_sidelobe_margin_db(const fieldmap::Cut &cut)
    {
        const auto &m = cut.magnitude;
        detail::require(m.size() >= 3, "peak_to_sidelobe_margin_db: cut needs at least 3 samples");
        const std::size_t p = static_cast<std::size_t>(std::max_element(m.begin(), m.end()) - m.begin());
        const double level = m[p] / std::sqrt(2.0);
        std::size_t lo = p, hi = p;
        while (lo > 0 && m[lo - 1] >= level)
            --lo;
        while (hi + 1 < m.size() && m[hi + 1] >= level)
            ++hi;
        std::optional<double> strongest;
        for (std::size_t i = 1; i + 1 < m.size(); ++i)
        {
            if (i >= lo && i <= hi)
                continue;
            if (m[i] > m[i - 1] && m[i] >= m[i + 1] && (!strongest || m[i] > *strongest))
                strongest = m[i];
        }
        if (!strongest)
            return std::nullopt;
        return -20.0 * std::log10(*strongest / m[p]);
    }
}
