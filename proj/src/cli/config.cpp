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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nfocus::cli
{
    using nlohmann::json;

    namespace
    {
        struct CommandName
        {
            Command command;
            std::string_view name;
        };

        constexpr CommandName command_names[] = {
            {Command::Phases, "phases"},         {Command::Fieldmap, "fieldmap"},
            {Command::Profile, "profile"},       {Command::Converge, "converge"},
            {Command::AxialRatio, "axial-ratio"}, {Command::Coupling, "coupling"},
        };

        std::vector<std::size_t> ladder(std::size_t lo, std::size_t hi, std::size_t step)
        {
            std::vector<std::size_t> out;
            for (std::size_t n = lo; n <= hi; n += step)
                out.push_back(n);
            return out;
        }

        RunConfig defaults_for(Command command, double frequency)
        {
            RunConfig c;
            c.command = command;
            c.frequency = frequency;
            const double lam = c.wavelength();
            c.spacing = 0.5 * lam;
            c.array.n_elements = command == Command::Profile ? 2000 : 20;
            c.array.focus_z = (command == Command::Profile ? 10.0 : 20.0) * lam;
            c.grid = {-5.0 * lam, 5.0 * lam, 0.5 * lam, 40.0 * lam, 201, 791};
            c.normalize_window = 2.0 * lam;
            c.profile = {2.0 * lam, 0.01 * lam};
            c.converge = {1.5, ladder(1, 1600, 1), 0.9};
            c.axial_ratio = {10.0 * lam, ladder(1, 200, 1), 0.9};
            c.coupling = {0.75 * lam, 3.0 * lam, 226};
            return c;
        }

        EnvironmentConfig default_environment(double lam)
        {
            EnvironmentConfig e;
            e.tx_height = 4.0 * lam;
            e.rx_height = 4.0 * lam;
            return e;
        }

        // Typed access to one JSON object that remembers which keys were consumed
        class Reader
        {
        public:
            Reader(const json &object, std::string prefix, double length_scale)
                : object_(object), prefix_(std::move(prefix)), scale_(length_scale)
            {
                if (!object_.is_object())
                    throw ConfigError(prefix_.empty() ? "<root>" : prefix_, "must be a JSON object");
            }

            std::string key(std::string_view name) const
            {
                return prefix_.empty() ? std::string(name) : prefix_ + "." + std::string(name);
            }

            const json *find(std::string_view name)
            {
                seen_.insert(std::string(name));
                const auto it = object_.find(std::string(name));
                return it == object_.end() ? nullptr : &*it;
            }

            void number(std::string_view name, double &out)
            {
                if (const json *v = find(name))
                {
                    if (!v->is_number())
                        throw ConfigError(key(name), "must be a number");
                    out = v->get<double>();
                    if (!std::isfinite(out))
                        throw ConfigError(key(name), "must be finite");
                }
            }

            void length(std::string_view name, double &out)
            {
                if (find(name))
                {
                    double raw = 0.0;
                    number(name, raw);
                    out = raw * scale_;
                }
            }

            void count(std::string_view name, std::size_t &out)
            {
                if (const json *v = find(name))
                {
                    if (!v->is_number_integer() || v->get<long long>() < 0)
                        throw ConfigError(key(name), "must be a non-negative integer");
                    out = v->get<std::size_t>();
                }
            }

            void boolean(std::string_view name, bool &out)
            {
                if (const json *v = find(name))
                {
                    if (!v->is_boolean())
                        throw ConfigError(key(name), "must be true or false");
                    out = v->get<bool>();
                }
            }

            void text(std::string_view name, std::string &out)
            {
                if (const json *v = find(name))
                {
                    if (!v->is_string())
                        throw ConfigError(key(name), "must be a string");
                    out = v->get<std::string>();
                }
            }

            void finish() const
            {
                for (const auto &item : object_.items())
                    if (!seen_.count(item.key()))
                        throw ConfigError(key(item.key()), "unknown key");
            }

        private:
            const json &object_;
            std::string prefix_;
            double scale_;
            std::set<std::string> seen_;
        };

        void read_sweep(Reader &r, SweepConfig &sweep, bool with_threshold)
        {
            r.length("focus_z", sweep.focus_z);
            const json *list = r.find("n_list");
            std::size_t lo = 0, hi = 0, step = 1;
            const bool has_min = r.find("n_min") != nullptr;
            const bool has_max = r.find("n_max") != nullptr;
            const bool has_step = r.find("n_step") != nullptr;
            const bool has_range = has_min || has_max || has_step;
            if (list && has_range)
                throw ConfigError(r.key("n_list"), "give either n_list or n_min/n_max/n_step, not both");
            if (list)
            {
                if (!list->is_array())
                    throw ConfigError(r.key("n_list"), "must be an array of integers");
                sweep.n_list.clear();
                for (const auto &v : *list)
                {
                    if (!v.is_number_integer() || v.get<long long>() < 1)
                        throw ConfigError(r.key("n_list"), "entries must be integers >= 1");
                    sweep.n_list.push_back(v.get<std::size_t>());
                }
            }
            else if (has_range)
            {
                lo = sweep.n_list.empty() ? 1 : sweep.n_list.front();
                hi = sweep.n_list.empty() ? 1 : sweep.n_list.back();
                r.count("n_min", lo);
                r.count("n_max", hi);
                r.count("n_step", step);
                if (lo < 1)
                    throw ConfigError(r.key("n_min"), "must be >= 1");
                if (step < 1)
                    throw ConfigError(r.key("n_step"), "must be >= 1");
                if (hi < lo)
                    throw ConfigError(r.key("n_max"), "must be >= n_min");
                sweep.n_list = ladder(lo, hi, step);
            }
            if (with_threshold)
                r.number("threshold", sweep.threshold);
            r.finish();
        }

        void check(bool condition, const std::string &key, const std::string &message)
        {
            if (!condition)
                throw ConfigError(key, message);
        }

        void check_sweep(const SweepConfig &s, const std::string &block, bool with_threshold)
        {
            check(s.focus_z > 0.0, block + ".focus_z", "must be positive");
            check(!s.n_list.empty(), block + ".n_list", "must not be empty");
            for (std::size_t i = 0; i < s.n_list.size(); ++i)
            {
                check(s.n_list[i] >= 1, block + ".n_list", "entries must be >= 1");
                check(i == 0 || s.n_list[i] > s.n_list[i - 1], block + ".n_list", "must be strictly ascending");
            }
            if (with_threshold)
                check(s.threshold > 0.0 && s.threshold < 1.0, block + ".threshold", "must lie in (0, 1)");
        }
    }

    std::string_view to_string(Command command)
    {
        for (const auto &c : command_names)
            if (c.command == command)
                return c.name;
        return "unknown";
    }

    Command command_from_string(std::string_view name)
    {
        for (const auto &c : command_names)
            if (c.name == name)
                return c.command;
        throw ConfigError("command", "unknown command '" + std::string(name) + "'");
    }

    const std::vector<Command> &all_commands()
    {
        static const std::vector<Command> commands = [] {
            std::vector<Command> v;
            for (const auto &c : command_names)
                v.push_back(c.command);
            return v;
        }();
        return commands;
    }

    RunConfig default_config(Command command)
    {
        return defaults_for(command, 6.0e9);
    }

    RunConfig parse_config(const json &document, Command command)
    {
        if (!document.is_object())
            throw ConfigError("<root>", "config must be a JSON object");

        double frequency = 6.0e9;
        if (const auto it = document.find("frequency"); it != document.end())
        {
            if (!it->is_number() || !(it->get<double>() > 0.0) || !std::isfinite(it->get<double>()))
                throw ConfigError("frequency", "must be a positive number of hertz");
            frequency = it->get<double>();
        }
        RunConfig c = defaults_for(command, frequency);
        const double lam = c.wavelength();

        double scale = 1.0;
        if (const auto it = document.find("length_unit"); it != document.end())
        {
            if (!it->is_string())
                throw ConfigError("length_unit", "must be \"m\" or \"wavelength\"");
            const auto unit = it->get<std::string>();
            if (unit == "wavelength")
                scale = lam;
            else if (unit != "m")
                throw ConfigError("length_unit", "must be \"m\" or \"wavelength\"");
        }

        Reader root(document, "", scale);
        root.find("frequency");
        root.find("length_unit");
        root.find("description");
        if (const json *v = root.find("command"))
        {
            if (!v->is_string() || command_from_string(v->get<std::string>()) != command)
                throw ConfigError("command", "config was written for a different command");
        }
        root.length("spacing", c.spacing);
        std::string output_dir = c.output_dir.string();
        root.text("output_dir", output_dir);
        c.output_dir = output_dir;
        root.boolean("normalize", c.normalize);
        root.length("normalize_window", c.normalize_window);

        if (const json *v = root.find("array"))
        {
            Reader r(*v, "array", scale);
            r.count("n_elements", c.array.n_elements);
            r.length("focus_z", c.array.focus_z);
            r.text("strategy", c.array.strategy);
            r.finish();
        }
        if (const json *v = root.find("grid"))
        {
            Reader r(*v, "grid", scale);
            r.length("x_min", c.grid.x_min);
            r.length("x_max", c.grid.x_max);
            r.length("z_min", c.grid.z_min);
            r.length("z_max", c.grid.z_max);
            r.count("nx", c.grid.nx);
            r.count("nz", c.grid.nz);
            r.finish();
        }
        if (const json *v = root.find("environment"))
        {
            Reader r(*v, "environment", scale);
            EnvironmentConfig e = default_environment(lam);
            r.length("tx_height", e.tx_height);
            r.length("rx_height", e.rx_height);
            std::string ground = "dielectric";
            double permittivity = 5.0;
            r.text("ground", ground);
            r.number("permittivity", permittivity);
            if (ground == "dielectric")
                e.ground = multipath::Dielectric{permittivity};
            else if (ground == "metal")
            {
                if (v->contains("permittivity"))
                    throw ConfigError("environment.permittivity", "not used with a metal ground");
                e.ground = multipath::Metal{};
            }
            else
                throw ConfigError("environment.ground", "must be \"dielectric\" or \"metal\"");
            std::string angle = "element-offset";
            r.text("grazing_angle", angle);
            if (angle == "specular")
                e.options.angle = multipath::GrazingAngle::Specular;
            else if (angle != "element-offset")
                throw ConfigError("environment.grazing_angle", "must be \"element-offset\" or \"specular\"");
            std::string numerator = "element-position";
            r.text("vertical_numerator", numerator);
            if (numerator == "relative-offset")
                e.options.vertical = multipath::VerticalNumerator::RelativeOffset;
            else if (numerator != "element-position")
                throw ConfigError("environment.vertical_numerator", "must be \"element-position\" or \"relative-offset\"");
            if (r.find("reflection_override"))
            {
                double g = 0.0;
                r.number("reflection_override", g);
                e.options.reflection_override = g;
            }
            r.finish();
            c.environment = e;
        }
        if (const json *v = root.find("profile"))
        {
            Reader r(*v, "profile", scale);
            r.length("span", c.profile.span);
            r.length("step", c.profile.step);
            r.finish();
        }
        if (const json *v = root.find("converge"))
        {
            Reader r(*v, "converge", scale);
            read_sweep(r, c.converge, true);
        }
        if (const json *v = root.find("axial_ratio"))
        {
            Reader r(*v, "axial_ratio", scale);
            read_sweep(r, c.axial_ratio, false);
        }
        if (const json *v = root.find("coupling"))
        {
            Reader r(*v, "coupling", scale);
            r.length("separation_min", c.coupling.separation_min);
            r.length("separation_max", c.coupling.separation_max);
            r.count("count", c.coupling.count);
            r.finish();
        }
        root.finish();
        validate(c);
        return c;
    }

    RunConfig load_config(const std::filesystem::path &path, Command command)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("--config", "cannot read " + path.string());
        json document;
        try
        {
            in >> document;
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
        }
        return parse_config(document, command);
    }

    void validate(const RunConfig &c)
    {
        check(c.frequency > 0.0 && std::isfinite(c.frequency), "frequency", "must be positive");
        check(c.spacing > 0.0, "spacing", "must be positive");
        check(!c.output_dir.empty(), "output_dir", "must not be empty");
        check(c.array.n_elements >= 1, "array.n_elements", "must be >= 1");
        check(c.array.focus_z > 0.0, "array.focus_z", "must be positive");
        const auto &s = c.array.strategy;
        check(s == "ex" || s == "ez" || s == "cp", "array.strategy", "must be \"ex\", \"ez\" or \"cp\"");

        switch (c.command)
        {
        case Command::Phases:
            check(s != "cp", "array.strategy", "phases needs \"ex\" or \"ez\"");
            break;
        case Command::Fieldmap:
        {
            const auto &g = c.grid;
            check(g.nx >= 1, "grid.nx", "must be >= 1");
            check(g.nz >= 1, "grid.nz", "must be >= 1");
            check(g.nx > 1 ? g.x_max > g.x_min : g.x_max == g.x_min, "grid.x_max",
                  "must exceed x_min (or equal it when nx == 1)");
            check(g.z_min > 0.0, "grid.z_min", "must be positive");
            check(g.nz > 1 ? g.z_max > g.z_min : g.z_max == g.z_min, "grid.z_max",
                  "must exceed z_min (or equal it when nz == 1)");
            check(c.normalize_window > 0.0, "normalize_window", "must be positive");
            if (c.environment)
            {
                const auto &e = *c.environment;
                check(s != "cp", "array.strategy", "two-ray maps need \"ex\" (horizontal) or \"ez\" (vertical)");
                check(e.tx_height > 0.0, "environment.tx_height", "must be positive");
                check(e.rx_height > 0.0, "environment.rx_height", "must be positive");
                if (const auto *d = std::get_if<multipath::Dielectric>(&e.ground))
                    check(d->permittivity >= 1.0, "environment.permittivity", "must be >= 1");
                if (e.options.reflection_override)
                    check(std::abs(*e.options.reflection_override) <= 1.0, "environment.reflection_override",
                          "must lie in [-1, 1]");
            }
            break;
        }
        case Command::Profile:
            check(s != "cp", "array.strategy", "profile needs \"ex\" or \"ez\"");
            check(c.array.n_elements >= 2, "array.n_elements", "profile needs at least 2 elements");
            check(c.profile.span > 0.0, "profile.span", "must be positive");
            check(c.profile.step > 0.0 && c.profile.step * 2.0 <= c.profile.span, "profile.step",
                  "must be positive and at most half the span");
            check(c.profile.span < c.array.focus_z, "profile.span", "must be smaller than array.focus_z");
            break;
        case Command::Converge:
            check_sweep(c.converge, "converge", true);
            break;
        case Command::AxialRatio:
            check_sweep(c.axial_ratio, "axial_ratio", false);
            break;
        case Command::Coupling:
        {
            const auto &p = c.coupling;
            check(p.separation_min > 0.5 * c.wavelength(), "coupling.separation_min",
                  "must exceed the half-wave dipole length (collinear pairs would overlap)");
            check(p.count >= 1, "coupling.count", "must be >= 1");
            check(p.count == 1 ? p.separation_max == p.separation_min : p.separation_max > p.separation_min,
                  "coupling.separation_max", "must exceed separation_min (or equal it when count == 1)");
            break;
        }
        }
    }

    std::string defaults_help()
    {
        return R"(Configuration (--config FILE, JSON). Every key is optional.
  frequency          Hz, default 6e9
  length_unit        "m" (default) or "wavelength"; applies to every length below
  spacing            element spacing, default lambda/2
  output_dir         default "."
  array              { n_elements: 20 (profile: 2000),
                       focus_z: 20 lambda (profile: 10 lambda),
                       strategy: "ex" | "ez" | "cp" (cp: fieldmap only), default "ex" }
  grid               fieldmap: { x_min: -5 lambda, x_max: 5 lambda, z_min: 0.5 lambda,
                       z_max: 40 lambda, nx: 201, nz: 791 }
  normalize          fieldmap: divide by the peak near the focus, default true
  normalize_window   half-size of that window, default 2 lambda
  environment        fieldmap two-ray ground model, absent by default:
                     { tx_height: 4 lambda, rx_height: 4 lambda,
                       ground: "dielectric" | "metal", permittivity: 5,
                       grazing_angle: "element-offset" | "specular",
                       vertical_numerator: "element-position" | "relative-offset",
                       reflection_override: none }
  profile            { span: 2 lambda, step: lambda/100 }
  converge           { focus_z: 1.5 m, n_min: 1, n_max: 1600, n_step: 1 (or n_list),
                       threshold: 0.9 }
  axial_ratio        { focus_z: 10 lambda, n_min: 1, n_max: 200, n_step: 1 (or n_list) }
  coupling           { separation_min: 0.75 lambda, separation_max: 3 lambda, count: 226 }
See schema/config.schema.json.
)";
    }
}
