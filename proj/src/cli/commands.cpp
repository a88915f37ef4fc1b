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

#include "commands.hpp"

#include "nfocus/aperture.hpp"
#include "nfocus/export.hpp"
#include "nfocus/polarization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace nfocus::cli
{
    using nlohmann::ordered_json;

    namespace
    {
        radiator::FocusStrategy strategy_of(const RunConfig &c)
        {
            return radiator::focus_strategy_from_string(c.array.strategy);
        }

        radiator::ArrayGeometry geometry_of(const RunConfig &c)
        {
            return radiator::ArrayGeometry(c.array.n_elements, c.spacing, c.wavelength());
        }

        std::string line(const char *format, double a)
        {
            char buf[160];
            std::snprintf(buf, sizeof buf, format, a);
            return buf;
        }

        std::string json_text(const ordered_json &j)
        {
            return j.dump(2) + "\n";
        }

        ordered_json optional_number(const std::optional<double> &v)
        {
            return v ? ordered_json(*v) : ordered_json(nullptr);
        }

        std::vector<double> linspace(double a, double b, std::size_t n)
        {
            std::vector<double> out(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
            return out;
        }
    }

    CommandOutput cmd_phases(const RunConfig &c)
    {
        const auto geom = geometry_of(c);
        const auto exc = radiator::conjugate_phases(geom, c.array.focus_z, strategy_of(c));
        const auto phases = exc.phases_deg();

        io::CsvTable table({"index", "x", "phase_deg"});
        CommandOutput out;
        out.report = "element        x [m]   phase [deg]\n";
        for (std::size_t i = 0; i < phases.size(); ++i)
        {
            table.add_row({static_cast<double>(i), geom.position(i), phases[i]});
            char buf[96];
            std::snprintf(buf, sizeof buf, "%7zu %12.6f %13.2f\n", i, geom.position(i), phases[i]);
            out.report += buf;
        }
        out.files.push_back({"phases.csv", table.str()});
        return out;
    }

    CommandOutput cmd_fieldmap(const RunConfig &c)
    {
        const auto geom = geometry_of(c);
        const auto &grid = c.grid;
        fieldmap::FieldMap map;
        io::MapDescription description;

        if (c.array.strategy == "cp")
        {
            map = polarization::cp_field_map(geom, c.array.focus_z, grid);
            description = io::MapDescription::of(
                geom, radiator::conjugate_phases(geom, c.array.focus_z, radiator::FocusStrategy::FocusEx));
            description.strategy = "cp";
        }
        else
        {
            const auto exc = radiator::conjugate_phases(geom, c.array.focus_z, strategy_of(c));
            description = io::MapDescription::of(geom, exc);
            if (c.environment)
            {
                const auto &e = *c.environment;
                io::TwoRayDescription t;
                t.environment = {e.tx_height, e.rx_height, e.ground, c.array.focus_z};
                t.polarization = exc.strategy == radiator::FocusStrategy::FocusEx ? multipath::Polarization::Horizontal
                                                                                  : multipath::Polarization::Vertical;
                t.options = e.options;
                map = multipath::two_ray_field(geom, exc, t.environment, grid, t.polarization, t.options);
                description.two_ray = t;
            }
            else
                map = fieldmap::evaluate_map(geom, exc, grid);
        }
        if (c.normalize)
            fieldmap::normalize_near_focus(map, {0.0, c.array.focus_z}, c.normalize_window);

        CommandOutput out;
        out.files.push_back({"fieldmap.csv", io::map_csv(map)});
        out.files.push_back({"fieldmap.json", io::map_sidecar_json(map, description)});
        out.report = "fieldmap: " + std::to_string(grid.nx) + " x " + std::to_string(grid.nz) + " cells, strategy " +
                     c.array.strategy + (c.environment ? ", two-ray ground" : ", line of sight") + "\n";
        return out;
    }

    CommandOutput cmd_profile(const RunConfig &c)
    {
        const auto geom = geometry_of(c);
        const auto exc = radiator::conjugate_phases(geom, c.array.focus_z, strategy_of(c));
        const bool is_ex = exc.strategy == radiator::FocusStrategy::FocusEx;
        const Component component = is_ex ? Component::Ex : Component::Ez;
        const double z0 = c.array.focus_z;
        const double lam = c.wavelength();

        const auto half = static_cast<std::size_t>(std::llround(c.profile.span / c.profile.step));
        const std::size_t n = 2 * half + 1;
        const auto width = fieldmap::lateral_cut(geom, exc, component, z0, -c.profile.span, c.profile.span, n);
        const auto depth = fieldmap::axial_cut(geom, exc, component, 0.0, z0 - c.profile.span, z0 + c.profile.span, n);
        const auto metrics = fieldmap::metrics_from_cuts(width, depth, {0.0, z0});

        const aperture::ApertureSpec spec{geom.aperture_length(), z0, geom.wavenumber()};
        const auto width_kind = is_ex ? aperture::ProfileKind::ExWidth : aperture::ProfileKind::EzWidth;
        const auto depth_kind = is_ex ? aperture::ProfileKind::ExDepth : aperture::ProfileKind::EzDepth;

        const auto overlay = [&](const fieldmap::Cut &cut, aperture::ProfileKind kind, double centre) {
            io::CsvTable table({"delta", "delta_lambda", "magnitude", "numeric_norm", "closed_form_norm"});
            const double ref = cut.magnitude[half];
            const double cf_ref = aperture::closed_form_profile(kind, 0.0, spec);
            for (std::size_t i = 0; i < n; ++i)
            {
                const double delta = cut.coordinate[i] - centre;
                table.add_row({delta, delta / lam, cut.magnitude[i], cut.magnitude[i] / ref,
                               aperture::closed_form_profile(kind, delta, spec) / cf_ref});
            }
            return table.str();
        };

        const auto cf_width = aperture::closed_form_halfpower(width_kind, spec);
        const auto cf_depth = aperture::closed_form_halfpower(depth_kind, spec);
        const auto cf_sidelobe = aperture::closed_form_sidelobe_db(width_kind, spec, c.profile.span);

        ordered_json j;
        j["component"] = is_ex ? "ex" : "ez";
        j["n_elements"] = geom.n_elements();
        j["spacing"] = geom.spacing();
        j["wavelength"] = lam;
        j["focus_z"] = z0;
        j["numeric"] = {
            {"peak_x", metrics.peak_pos.x},
            {"peak_z", metrics.peak_pos.z},
            {"peak_magnitude", metrics.peak_mag},
            {"width_full_lambda", metrics.halfpower_width_full / lam},
            {"width_one_sided_lambda", metrics.halfpower_width_one_sided / lam},
            {"depth_full_lambda", metrics.halfpower_depth_full / lam},
            {"depth_one_sided_lambda", metrics.halfpower_depth_one_sided / lam},
            {"depth_width_ratio", metrics.halfpower_depth_full / metrics.halfpower_width_full},
            {"strongest_sidelobe_db", optional_number(metrics.strongest_sidelobe_db)},
            {"focal_shift_lambda", metrics.focal_shift / lam},
            {"peak_interior", metrics.peak_interior},
            {"width_bounded", metrics.width_bounded},
            {"depth_bounded", metrics.depth_bounded},
        };
        j["closed_form"] = {
            {"aperture_length", spec.length},
            {"width_full_lambda", cf_width.full() / lam},
            {"width_one_sided_lambda", cf_width.one_sided() / lam},
            {"depth_full_lambda", cf_depth.full() / lam},
            {"depth_one_sided_lambda", cf_depth.one_sided() / lam},
            {"depth_width_ratio", cf_depth.full() / cf_width.full()},
            {"strongest_sidelobe_db", optional_number(cf_sidelobe)},
        };

        CommandOutput out;
        out.files.push_back({"metrics.json", json_text(j)});
        out.files.push_back({"width_cut.csv", overlay(width, width_kind, 0.0)});
        out.files.push_back({"depth_cut.csv", overlay(depth, depth_kind, z0)});
        out.report = std::string("profile (") + (is_ex ? "ex" : "ez") + ")\n" +
                     line("  width  full %.4f lambda", metrics.halfpower_width_full / lam) +
                     line("  (closed form %.4f)\n", cf_width.full() / lam) +
                     line("  depth  full %.4f lambda", metrics.halfpower_depth_full / lam) +
                     line("  (closed form %.4f)\n", cf_depth.full() / lam) +
                     line("  depth/width  %.3f\n", metrics.halfpower_depth_full / metrics.halfpower_width_full);
        if (metrics.strongest_sidelobe_db)
            out.report += line("  width-cut sidelobe %.2f dB\n", *metrics.strongest_sidelobe_db);
        return out;
    }

    CommandOutput cmd_converge(const RunConfig &c)
    {
        const auto &s = c.converge;
        const auto sweep = fieldmap::convergence_sweep(s.focus_z, c.spacing, c.wavelength(), s.n_list);
        io::CsvTable table({"n", "peak_ex", "peak_ez"});
        for (const auto &p : sweep)
            table.add_row({static_cast<double>(p.n_elements), p.peak_ex, p.peak_ez});

        const double asymptote = 2.0 / c.spacing;
        const double threshold = s.threshold * asymptote;
        const auto nx = fieldmap::first_reaching(sweep, Component::Ex, threshold);
        const auto nz = fieldmap::first_reaching(sweep, Component::Ez, threshold);
        const auto as_json = [](const std::optional<std::size_t> &v) {
            return v ? ordered_json(*v) : ordered_json(nullptr);
        };
        ordered_json j;
        j["focus_z"] = s.focus_z;
        j["spacing"] = c.spacing;
        j["asymptote"] = asymptote;
        j["threshold_fraction"] = s.threshold;
        j["threshold"] = threshold;
        j["n_ex"] = as_json(nx);
        j["n_ez"] = as_json(nz);

        CommandOutput out;
        out.files.push_back({"converge.csv", table.str()});
        out.files.push_back({"converge.json", json_text(j)});
        const auto text = [](const std::optional<std::size_t> &v) {
            return v ? std::to_string(*v) : std::string("not reached");
        };
        out.report = line("asymptote 2/d = %.6g, ", asymptote) + line("threshold %.6g\n", threshold) +
                     "  E_x reaches it at N = " + text(nx) + "\n  E_z reaches it at N = " + text(nz) + "\n";
        return out;
    }

    CommandOutput cmd_axial_ratio(const RunConfig &c)
    {
        const auto &s = c.axial_ratio;
        const auto sweep = polarization::axial_ratio_sweep(c.spacing, c.wavelength(), s.focus_z, s.n_list);
        io::CsvTable table({"n", "ex_peak", "ez_peak", "axial_ratio"});
        for (const auto &r : sweep)
            table.add_row({static_cast<double>(r.n_elements), r.ex_peak, r.ez_peak, r.axial_ratio});
        const std::size_t n_min = polarization::min_elements_for_cp(c.spacing, c.wavelength(), s.focus_z);

        ordered_json j;
        j["focus_z"] = s.focus_z;
        j["spacing"] = c.spacing;
        j["max_axial_ratio"] = polarization::max_cp_axial_ratio;
        j["min_elements_for_cp"] = n_min;

        CommandOutput out;
        out.files.push_back({"axial_ratio.csv", table.str()});
        out.files.push_back({"axial_ratio.json", json_text(j)});
        out.report = line("focus %.6g m: ", s.focus_z) + "circular polarisation from N = " + std::to_string(n_min) + "\n";
        return out;
    }

    CommandOutput cmd_coupling(const RunConfig &c)
    {
        const auto &p = c.coupling;
        const double lam = c.wavelength();
        const double k = wavenumber_from_wavelength(lam);
        io::CsvTable table({"separation", "separation_lambda", "re_side_by_side", "im_side_by_side", "abs_side_by_side",
                            "re_collinear", "im_collinear", "abs_collinear"});
        for (const double d : linspace(p.separation_min, p.separation_max, p.count))
        {
            const complex side = aperture::mutual_impedance({aperture::Arrangement::SideBySide, d, 0.5 * lam}, k);
            const complex col = aperture::mutual_impedance({aperture::Arrangement::Collinear, d, 0.5 * lam}, k);
            table.add_row({d, d / lam, side.real(), side.imag(), std::abs(side), col.real(), col.imag(), std::abs(col)});
        }
        CommandOutput out;
        out.files.push_back({"coupling.csv", table.str()});
        out.report = "coupling: " + std::to_string(p.count) + " separations\n";
        return out;
    }

    CommandOutput run_command(const RunConfig &config)
    {
        validate(config);
        switch (config.command)
        {
        case Command::Phases:
            return cmd_phases(config);
        case Command::Fieldmap:
            return cmd_fieldmap(config);
        case Command::Profile:
            return cmd_profile(config);
        case Command::Converge:
            return cmd_converge(config);
        case Command::AxialRatio:
            return cmd_axial_ratio(config);
        case Command::Coupling:
            return cmd_coupling(config);
        }
        throw ConfigError("command", "unknown command");
    }

    std::vector<OutputFile> seed_figure_configs()
    {
        std::vector<OutputFile> out;
        const auto add = [&](const std::string &name, ordered_json j) {
            ordered_json doc;
            doc["command"] = j["command"];
            doc["description"] = j["description"];
            doc["frequency"] = 6.0e9;
            doc["length_unit"] = "wavelength";
            doc["output_dir"] = name;
            for (auto it = j.begin(); it != j.end(); ++it)
                if (it.key() != "command" && it.key() != "description")
                    doc[it.key()] = it.value();
            out.push_back({name + ".json", json_text(doc)});
        };
        const ordered_json map_grid = {{"x_min", -5}, {"x_max", 5}, {"z_min", 0.5},
                                       {"z_max", 40}, {"nx", 201}, {"nz", 791}};

        add("fig03_converge", {{"command", "converge"},
                               {"description", "focal peak vs element count, d = 0.025 m, z0 = 1.5 m"},
                               {"converge", {{"focus_z", 30}, {"n_min", 1}, {"n_max", 1600}, {"n_step", 1}}}});
        add("fig04_profile_ex", {{"command", "profile"},
                                 {"description", "E_x width/depth, discrete vs closed form"},
                                 {"array", {{"n_elements", 2000}, {"focus_z", 10}, {"strategy", "ex"}}}});
        add("fig05_profile_ez", {{"command", "profile"},
                                 {"description", "E_z width/depth, discrete vs closed form"},
                                 {"array", {{"n_elements", 2000}, {"focus_z", 10}, {"strategy", "ez"}}}});
        for (const int focus : {10, 20, 40})
            add("fig06_axial_ratio_" + std::to_string(focus) + "lambda",
                {{"command", "axial-ratio"},
                 {"description", "axial ratio vs element count"},
                 {"axial_ratio", {{"focus_z", focus}, {"n_min", 1}, {"n_max", 6 * focus}, {"n_step", 1}}}});
        for (const int n : {20, 2000})
            for (const char *strategy : {"ex", "ez", "cp"})
                add(std::string(n == 20 ? "fig07" : "fig08") + "_fieldmap_" + strategy,
                    {{"command", "fieldmap"},
                     {"description", "line-of-sight map, focus (0, 20 lambda)"},
                     {"array", {{"n_elements", n}, {"focus_z", 20}, {"strategy", strategy}}},
                     {"grid", map_grid}});

        struct TwoRayFigure
        {
            const char *figure;
            int n;
            const char *strategy;
            const char *ground;
        };
        const TwoRayFigure two_ray[] = {
            {"fig10", 20, "ex", "dielectric"}, {"fig11", 2000, "ex", "dielectric"}, {"fig12", 20, "ex", "metal"},
            {"fig13", 20, "ez", "dielectric"}, {"fig14", 2000, "ez", "dielectric"}, {"fig15", 20, "ez", "metal"},
        };
        for (const auto &f : two_ray)
            for (const int h : {4, 40})
            {
                ordered_json env = {{"tx_height", h}, {"rx_height", h}, {"ground", f.ground}};
                if (std::string(f.ground) == "dielectric")
                    env["permittivity"] = 5;
                add(std::string(f.figure) + "_two_ray_" + f.strategy + "_h" + std::to_string(h) + "lambda",
                    {{"command", "fieldmap"},
                     {"description", std::string("two-ray ") + f.ground + " ground, equal heights"},
                     {"array", {{"n_elements", f.n}, {"focus_z", 20}, {"strategy", f.strategy}}},
                     {"grid", map_grid},
                     {"environment", env}});
            }
        add("coupling", {{"command", "coupling"},
                         {"description", "half-wave dipole mutual impedance vs separation"},
                         {"coupling", {{"separation_min", 0.75}, {"separation_max", 3}, {"count", 226}}}});
        return out;
    }

    void commit(const std::filesystem::path &directory, const std::vector<OutputFile> &files)
    {
        std::filesystem::create_directories(directory);
        std::vector<std::filesystem::path> staged;
        try
        {
            for (const auto &f : files)
            {
                auto tmp = directory / f.name;
                tmp += ".partial";
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw std::runtime_error("cannot open " + tmp.string() + " for writing");
                staged.push_back(tmp);
                out.write(f.content.data(), static_cast<std::streamsize>(f.content.size()));
                out.close();
                if (!out)
                    throw std::runtime_error("failed writing " + tmp.string());
            }
        }
        catch (...)
        {
            std::error_code ec;
            for (const auto &p : staged)
                std::filesystem::remove(p, ec);
            throw;
        }
        for (std::size_t i = 0; i < files.size(); ++i)
            std::filesystem::rename(staged[i], directory / files[i].name);
    }
}
