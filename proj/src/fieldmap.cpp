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

#include "nfocus/fieldmap.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <string>

namespace nfocus::fieldmap
{
    namespace
    {
        void check_inputs(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, const GridSpec &grid)
        {
            grid.validate();
            detail::require(excitation.weights.size() == geom.n_elements(),
                            "evaluate_map: excitation length does not match the array");
        }

        FieldMap empty_map(const GridSpec &grid)
        {
            FieldMap map;
            map.grid = grid;
            map.ex.assign(grid.size(), complex(0.0, 0.0));
            map.ez.assign(grid.size(), complex(0.0, 0.0));
            return map;
        }

        inline void evaluate_cell(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation,
                                  FieldMap &map, std::size_t cell)
        {
            const std::size_t i = cell / map.grid.nz;
            const std::size_t j = cell % map.grid.nz;
            complex ex(0.0, 0.0), ez(0.0, 0.0);
            radiator::kernel::accumulate(geom.positions(), excitation.weights, geom.wavenumber(),
                                         map.grid.x(i), map.grid.z(j), ex, ez);
            map.ex[cell] = ex;
            map.ez[cell] = ez;
        }
    }

    void GridSpec::validate() const
    {
        const auto axis = [](double lo, double hi, std::size_t n, const char *name) {
            detail::require(std::isfinite(lo) && std::isfinite(hi), std::string("GridSpec: ") + name + " range must be finite");
            detail::require(n >= 1, std::string("GridSpec: ") + name + " count must be at least 1");
            if (n == 1)
                detail::require(lo == hi, std::string("GridSpec: single-sample ") + name + " axis needs min == max");
            else
                detail::require(lo < hi, std::string("GridSpec: ") + name + " range needs min < max");
        };
        axis(x_min, x_max, nx, "x");
        axis(z_min, z_max, nz, "z");
        detail::require(z_min > 0.0, "GridSpec: z_min must be positive (array lies on z = 0)");
    }

    double GridSpec::x(std::size_t i) const
    {
        return nx > 1 ? x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1) : x_min;
    }

    double GridSpec::z(std::size_t j) const
    {
        return nz > 1 ? z_min + (z_max - z_min) * static_cast<double>(j) / static_cast<double>(nz - 1) : z_min;
    }

    std::string_view to_string(Normalization normalization)
    {
        return normalization == Normalization::None ? "none" : "peak_near_focus";
    }

    double FieldMap::magnitude(std::size_t cell, Component component) const
    {
        switch (component)
        {
        case Component::Ex:
            return std::abs(ex[cell]);
        case Component::Ez:
            return std::abs(ez[cell]);
        case Component::Total:
            return std::sqrt(std::norm(ex[cell]) + std::norm(ez[cell]));
        }
        return 0.0;
    }

    FieldMap evaluate_map(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, const GridSpec &grid)
    {
        check_inputs(geom, excitation, grid);
        FieldMap map = empty_map(grid);
        const auto cells = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t cell = 0; cell < cells; ++cell)
            evaluate_cell(geom, excitation, map, static_cast<std::size_t>(cell));
        return map;
    }

    FieldMap evaluate_map_serial(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, const GridSpec &grid)
    {
        check_inputs(geom, excitation, grid);
        FieldMap map = empty_map(grid);
        for (std::size_t cell = 0; cell < grid.size(); ++cell)
            evaluate_cell(geom, excitation, map, cell);
        return map;
    }

    void normalize_near_focus(FieldMap &map, Point focus, double window)
    {
        detail::require(window > 0.0, "normalize_near_focus: window must be positive");
        double peak = 0.0;
        bool found = false;
        for (std::size_t i = 0; i < map.grid.nx; ++i)
        {
            if (std::abs(map.grid.x(i) - focus.x) > window)
                continue;
            for (std::size_t j = 0; j < map.grid.nz; ++j)
            {
                if (std::abs(map.grid.z(j) - focus.z) > window)
                    continue;
                found = true;
                peak = std::max(peak, map.magnitude(map.index(i, j), Component::Total));
            }
        }
        detail::require(found, "normalize_near_focus: no grid cell within the focal window");
        detail::require(peak > 0.0, "normalize_near_focus: field vanishes in the focal window");

        for (auto &v : map.ex)
            v /= peak;
        for (auto &v : map.ez)
            v /= peak;
        map.normalization = Normalization::PeakNearFocus;
        map.peak_value *= peak;
    }

    std::vector<ConvergencePoint> convergence_sweep(double focus_z, double spacing, double wavelength,
                                                    std::span<const std::size_t> n_list)
    {
        detail::require(focus_z > 0.0, "convergence_sweep: focus_z must be positive");
        for (std::size_t i = 1; i < n_list.size(); ++i)
            detail::require(n_list[i - 1] < n_list[i], "convergence_sweep: n_list must be strictly ascending");

        std::vector<ConvergencePoint> out;
        out.reserve(n_list.size());
        for (const std::size_t n : n_list)
        {
            const radiator::ArrayGeometry geom(n, spacing, wavelength);
            const auto ex_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEx);
            const auto ez_exc = radiator::conjugate_phases(geom, focus_z, radiator::FocusStrategy::FocusEz);
            const Point focus{0.0, focus_z};
            out.push_back({n, std::abs(radiator::field_at(geom, ex_exc, focus).ex),
                           std::abs(radiator::field_at(geom, ez_exc, focus).ez)});
        }
        return out;
    }

    std::optional<std::size_t> first_reaching(std::span<const ConvergencePoint> sweep, Component component, double threshold)
    {
        for (const auto &p : sweep)
        {
            const double v = component == Component::Ex ? p.peak_ex : p.peak_ez;
            if (v >= threshold)
                return p.n_elements;
        }
        return std::nullopt;
    }

    namespace
    {
        Cut line_cut(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, Component component,
                     const GridSpec &grid, bool along_x)
        {
            const FieldMap map = evaluate_map(geom, excitation, grid);
            Cut cut;
            cut.coordinate.resize(grid.size());
            cut.magnitude.resize(grid.size());
            for (std::size_t c = 0; c < grid.size(); ++c)
            {
                cut.coordinate[c] = along_x ? grid.x(c) : grid.z(c);
                cut.magnitude[c] = map.magnitude(c, component);
            }
            return cut;
        }
    }

    Cut lateral_cut(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, Component component,
                    double z, double x_min, double x_max, std::size_t n)
    {
        return line_cut(geom, excitation, component, GridSpec::lateral_line(z, x_min, x_max, n), true);
    }

    Cut axial_cut(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, Component component,
                  double x, double z_min, double z_max, std::size_t n)
    {
        return line_cut(geom, excitation, component, GridSpec::axial_line(x, z_min, z_max, n), false);
    }
}
