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

#ifndef NFOCUS_CLI_COMMANDS_HPP
#define NFOCUS_CLI_COMMANDS_HPP

#include "config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace nfocus::cli
{
    struct OutputFile
    {
        std::filesystem::path name; // relative to RunConfig::output_dir
        std::string content;
    };

    // Everything a command produces. Nothing touches the filesystem until commit().
    struct CommandOutput
    {
        std::vector<OutputFile> files;
        std::string report; // human-readable summary for stdout
    };

    CommandOutput cmd_phases(const RunConfig &config);
    CommandOutput cmd_fieldmap(const RunConfig &config);
    CommandOutput cmd_profile(const RunConfig &config);
    CommandOutput cmd_converge(const RunConfig &config);
    CommandOutput cmd_axial_ratio(const RunConfig &config);
    CommandOutput cmd_coupling(const RunConfig &config);

    CommandOutput run_command(const RunConfig &config);

    // One config per reproducible figure, named figNN_*.json
    std::vector<OutputFile> seed_figure_configs();

    // Write every file to a temporary name first, then rename them all into place
    void commit(const std::filesystem::path &directory, const std::vector<OutputFile> &files);

    // Process exit codes
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_failure = 1;
    inline constexpr int exit_config = 2;
    inline constexpr int exit_tolerance = 3;
}

#endif
