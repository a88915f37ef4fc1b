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

#ifndef NFOCUS_EXPORT_HPP
#define NFOCUS_EXPORT_HPP

#include "nfocus/fieldmap.hpp"
#include "nfocus/multipath.hpp"
#include "nfocus/radiator.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfocus::io
{
    // 17 significant digits, enough to round-trip every double
    std::string format_number(double value);

    // Plain CSV table; every numeric cell is written with format_number
    class CsvTable
    {
    public:
        explicit CsvTable(std::vector<std::string> header);

        void add_row(std::initializer_list<double> values);
        void add_row(const std::vector<double> &values);
        std::size_t rows() const { return rows_.size(); }
        std::string str() const;

    private:
        std::vector<std::string> header_;
        std::vector<std::vector<double>> rows_;
    };

    struct TwoRayDescription
    {
        multipath::TwoRayEnvironment environment;
        multipath::Polarization polarization = multipath::Polarization::Horizontal;
        multipath::TwoRayOptions options;
    };

    // Everything the sidecar records about how a map was produced
    struct MapDescription
    {
        std::size_t n_elements = 0;
        double spacing = 0.0;
        double wavelength = 0.0;
        std::string strategy; // "ex", "ez" or "cp"
        double focus_z = 0.0;
        std::optional<TwoRayDescription> two_ray;

        static MapDescription of(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation);
    };

    // One row per cell in storage order: x,z,re_ex,im_ex,re_ez,im_ez,mag_total
    std::string map_csv(const fieldmap::FieldMap &map);

    // JSON metadata for map_csv: grid, geometry, excitation, normalisation, environment
    std::string map_sidecar_json(const fieldmap::FieldMap &map, const MapDescription &description);
}

#endif
