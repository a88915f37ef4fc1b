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

#ifndef NFOCUS_CLI_CONFIG_HPP
#define NFOCUS_CLI_CONFIG_HPP

#include "nfocus/fieldmap.hpp"
#include "nfocus/multipath.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nfocus::cli
{
    // Invalid configuration; key() is the dotted path of the offending entry
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string key, const std::string &message)
            : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    enum class Command
    {
        Phases,
        Fieldmap,
        Profile,
        Converge,
        AxialRatio,
        Coupling
    };

    std::string_view to_string(Command command);
    Command command_from_string(std::string_view name);
    const std::vector<Command> &all_commands();

    struct ArrayConfig
    {
        std::size_t n_elements = 20;
        double focus_z = 1.0;      // [m]
        std::string strategy = "ex"; // ex, ez, cp (cp: fieldmap only)
    };

    struct EnvironmentConfig
    {
        double tx_height = 0.0;
        double rx_height = 0.0;
        multipath::Ground ground = multipath::Dielectric{5.0};
        multipath::TwoRayOptions options;
    };

    struct ProfileConfig
    {
        double span = 0.0; // half-length of each cut around the focus [m]
        double step = 0.0; // sample spacing along the cuts [m]
    };

    struct SweepConfig
    {
        double focus_z = 0.0;
        std::vector<std::size_t> n_list;
        double threshold = 0.9; // converge: fraction of the 2/d asymptote
    };

    struct CouplingConfig
    {
        double separation_min = 0.0;
        double separation_max = 0.0;
        std::size_t count = 0;
    };

    struct RunConfig
    {
        Command command = Command::Phases;
        double frequency = 6.0e9;
        double spacing = 0.0; // default lambda / 2
        std::filesystem::path output_dir = ".";
        ArrayConfig array;
        fieldmap::GridSpec grid;
        bool normalize = true;
        double normalize_window = 0.0; // default 2 lambda
        std::optional<EnvironmentConfig> environment;
        ProfileConfig profile;
        SweepConfig converge;
        SweepConfig axial_ratio;
        CouplingConfig coupling;

        double wavelength() const { return wavelength_from_frequency(frequency); }
    };

    // Defaults for a command, as documented in --help and the schema file
    RunConfig default_config(Command command);

    // Parse a JSON document on top of the command defaults and validate every block.
    // Lengths are metres unless "length_unit" is "wavelength".
    RunConfig parse_config(const nlohmann::json &document, Command command);
    RunConfig load_config(const std::filesystem::path &path, Command command);

    // Re-check a (possibly flag-modified) configuration before any computation
    void validate(const RunConfig &config);

    // Human-readable description of every key and default
    std::string defaults_help();
}

#endif
