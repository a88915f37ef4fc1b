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

#ifndef NFOCUS_FIELDMAP_HPP
#define NFOCUS_FIELDMAP_HPP

#include "nfocus/common.hpp"
#include "nfocus/radiator.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nfocus::fieldmap
{
    // Regular grid in the x-z plane. An axis with n == 1 is a single line at min == max.
    struct GridSpec
    {
        double x_min = 0.0;
        double x_max = 0.0;
        double z_min = 0.0;
        double z_max = 0.0;
        std::size_t nx = 0;
        std::size_t nz = 0;

        void validate() const;

        double x(std::size_t i) const;
        double z(std::size_t j) const;
        double dx() const { return nx > 1 ? (x_max - x_min) / static_cast<double>(nx - 1) : 0.0; }
        double dz() const { return nz > 1 ? (z_max - z_min) / static_cast<double>(nz - 1) : 0.0; }
        std::size_t size() const { return nx * nz; }

        static GridSpec point(Point p) { return {p.x, p.x, p.z, p.z, 1, 1}; }
        static GridSpec axial_line(double x, double z_min, double z_max, std::size_t nz) { return {x, x, z_min, z_max, 1, nz}; }
        static GridSpec lateral_line(double z, double x_min, double x_max, std::size_t nx) { return {x_min, x_max, z, z, nx, 1}; }
    };

    enum class Normalization
    {
        None,
        PeakNearFocus
    };

    std::string_view to_string(Normalization normalization);

    // Cells are stored x-major: index(i, j) = i * nz + j
    struct FieldMap
    {
        GridSpec grid;
        std::vector<complex> ex;
        std::vector<complex> ez;
        Normalization normalization = Normalization::None;
        double peak_value = 1.0; // divisor applied by normalisation

        std::size_t index(std::size_t i, std::size_t j) const { return i * grid.nz + j; }
        double magnitude(std::size_t cell, Component component) const;
    };

    // OpenMP data-parallel evaluation. Each cell is a serial sum over elements, so the
    // result is bit-identical to evaluate_map_serial for any thread count.
    FieldMap evaluate_map(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, const GridSpec &grid);

    // Reference implementation kept for testing and benchmarking
    FieldMap evaluate_map_serial(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, const GridSpec &grid);

    // Divide both components by the largest total magnitude within +-window of the focus
    // (both axes). Throws DomainError when no cell lies inside the window.
    void normalize_near_focus(FieldMap &map, Point focus, double window);

    struct BeamMetrics
    {
        Point peak_pos;
        double peak_mag = 0.0;
        double halfpower_width_one_sided = 0.0;
        double halfpower_width_full = 0.0;
        double halfpower_depth_one_sided = 0.0;
        double halfpower_depth_full = 0.0;
        std::optional<double> strongest_sidelobe_db; // width cut, dB relative to the peak
        double focal_shift = 0.0;                    // target z - peak z
        bool peak_interior = true;                   // false: no interior local maximum found
        bool width_bounded = true;                   // false: a width crossing fell off the cut
        bool depth_bounded = true;                   // false: a depth crossing fell off the cut
    };

    // A 1-D cut through the peak: sample coordinates and magnitudes (uniform spacing)
    struct Cut
    {
        std::vector<double> coordinate;
        std::vector<double> magnitude;
    };

    struct CutCrossings
    {
        double peak_coordinate = 0.0;
        double peak_magnitude = 0.0;
        double lower = 0.0;
        double upper = 0.0;
        bool bounded = true;
        std::optional<double> sidelobe_db;
    };

    // Half-power analysis of one cut around its sample `peak_index`
    CutCrossings analyze_cut(const Cut &cut, std::size_t peak_index);

    // Metrics from a width cut (along x) and a depth cut (along z) that cross at the peak
    BeamMetrics metrics_from_cuts(const Cut &width_cut, const Cut &depth_cut, Point target_focus);

    // Metrics from a 2-D map (nx, nz >= 3). The peak is the largest interior local
    // maximum of the chosen component; the cuts are the row and column through it.
    BeamMetrics extract_metrics(const FieldMap &map, Component component, Point target_focus);

    struct ConvergencePoint
    {
        std::size_t n_elements = 0;
        double peak_ex = 0.0;
        double peak_ez = 0.0;
    };

    // Focal peak of each polarisation at (0, z0) for every array size in n_list (ascending)
    std::vector<ConvergencePoint> convergence_sweep(double focus_z, double spacing, double wavelength,
                                                    std::span<const std::size_t> n_list);

    // First entry whose peak reaches `threshold`; empty if none does
    std::optional<std::size_t> first_reaching(std::span<const ConvergencePoint> sweep, Component component, double threshold);

    // Grid evaluation of the cut through (x, z) along one axis, used for profiles
    Cut lateral_cut(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, Component component,
                    double z, double x_min, double x_max, std::size_t n);
    Cut axial_cut(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation, Component component,
                  double x, double z_min, double z_max, std::size_t n);
}

#endif
