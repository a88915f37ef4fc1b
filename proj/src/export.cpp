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

#include "nfocus/export.hpp"

#include <json.hpp>

#include <cstdio>
#include <variant>

namespace nfocus::io
{
    std::string format_number(double value)
    {
        char buf[32];
        const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
        return std::string(buf, static_cast<std::size_t>(n));
    }

    CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header))
    {
        detail::require(!header_.empty(), "CsvTable: header must not be empty");
    }

    void CsvTable::add_row(std::initializer_list<double> values)
    {
        add_row(std::vector<double>(values));
    }

    void CsvTable::add_row(const std::vector<double> &values)
    {
        detail::require(values.size() == header_.size(), "CsvTable: row width does not match the header");
        rows_.push_back(values);
    }

    std::string CsvTable::str() const
    {
        std::string out;
        for (std::size_t c = 0; c < header_.size(); ++c)
        {
            if (c)
                out += ',';
            out += header_[c];
        }
        out += '\n';
        for (const auto &row : rows_)
        {
            for (std::size_t c = 0; c < row.size(); ++c)
            {
                if (c)
                    out += ',';
                out += format_number(row[c]);
            }
            out += '\n';
        }
        return out;
    }

    MapDescription MapDescription::of(const radiator::ArrayGeometry &geom, const radiator::Excitation &excitation)
    {
        MapDescription d;
        d.n_elements = geom.n_elements();
        d.spacing = geom.spacing();
        d.wavelength = geom.wavelength();
        d.strategy = std::string(radiator::to_string(excitation.strategy));
        d.focus_z = excitation.focus_z;
        return d;
    }

    std::string map_csv(const fieldmap::FieldMap &map)
    {
        const auto &g = map.grid;
        std::string out = "x,z,re_ex,im_ex,re_ez,im_ez,mag_total\n";
        out.reserve(out.size() + g.size() * 7 * 25);
        for (std::size_t i = 0; i < g.nx; ++i)
            for (std::size_t j = 0; j < g.nz; ++j)
            {
                const std::size_t cell = map.index(i, j);
                const double values[] = {g.x(i), g.z(j), map.ex[cell].real(), map.ex[cell].imag(),
                                         map.ez[cell].real(), map.ez[cell].imag(), map.magnitude(cell, Component::Total)};
                for (std::size_t c = 0; c < 7; ++c)
                {
                    if (c)
                        out += ',';
                    out += format_number(values[c]);
                }
                out += '\n';
            }
        return out;
    }

    std::string map_sidecar_json(const fieldmap::FieldMap &map, const MapDescription &description)
    {
        using nlohmann::ordered_json;
        const auto &g = map.grid;
        ordered_json j;
        j["columns"] = {"x", "z", "re_ex", "im_ex", "re_ez", "im_ez", "mag_total"};
        j["row_order"] = "x-major";
        j["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"z_min", g.z_min},
                     {"z_max", g.z_max}, {"nx", g.nx},       {"nz", g.nz}};
        j["geometry"] = {{"n_elements", description.n_elements},
                         {"spacing", description.spacing},
                         {"wavelength", description.wavelength},
                         {"frequency", speed_of_light / description.wavelength}};
        j["excitation"] = {{"strategy", description.strategy}, {"focus_z", description.focus_z}};
        j["normalization"] = {{"mode", std::string(fieldmap::to_string(map.normalization))},
                              {"peak_value", map.peak_value}};
        if (description.two_ray)
        {
            const auto &t = *description.two_ray;
            ordered_json env;
            env["model"] = "two-ray";
            env["tx_height"] = t.environment.tx_height;
            env["rx_height"] = t.environment.rx_height;
            if (const auto *d = std::get_if<multipath::Dielectric>(&t.environment.ground))
            {
                env["ground"] = "dielectric";
                env["permittivity"] = d->permittivity;
            }
            else
                env["ground"] = "metal";
            env["polarization"] = std::string(multipath::to_string(t.polarization));
            env["grazing_angle"] = t.options.angle == multipath::GrazingAngle::ElementOffset ? "element-offset" : "specular";
            env["vertical_numerator"] =
                t.options.vertical == multipath::VerticalNumerator::ElementPosition ? "element-position" : "relative-offset";
            if (t.options.reflection_override)
                env["reflection_override"] = *t.options.reflection_override;
            env["range_axis"] = "z";
            j["environment"] = env;
        }
        return j.dump(2) + "\n";
    }
}
