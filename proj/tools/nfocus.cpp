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

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace nfocus;

namespace
{
    struct Overrides
    {
        std::string config;
        std::string out;
        std::string strategy;
        std::string ground;
        std::size_t n_elements = 0;
        bool quiet = false;
    };

    void apply(cli::RunConfig &config, const Overrides &o)
    {
        if (!o.out.empty())
            config.output_dir = o.out;
        if (!o.strategy.empty())
            config.array.strategy = o.strategy;
        if (o.n_elements)
            config.array.n_elements = o.n_elements;
        if (!o.ground.empty())
        {
            if (!config.environment)
            {
                const double lam = config.wavelength();
                config.environment = cli::EnvironmentConfig{};
                config.environment->tx_height = 4.0 * lam;
                config.environment->rx_height = 4.0 * lam;
            }
            if (o.ground == "metal")
                config.environment->ground = multipath::Metal{};
            else if (o.ground == "dielectric")
            {
                if (!std::holds_alternative<multipath::Dielectric>(config.environment->ground))
                    config.environment->ground = multipath::Dielectric{5.0};
            }
            else
                throw cli::ConfigError("--ground", "must be \"dielectric\" or \"metal\"");
        }
    }

    int run(cli::Command command, const Overrides &o)
    {
        auto config = o.config.empty() ? cli::default_config(command) : cli::load_config(o.config, command);
        apply(config, o);
        cli::validate(config);
        const auto output = cli::run_command(config);
        cli::commit(config.output_dir, output.files);
        if (!o.quiet)
        {
            std::cout << output.report;
            for (const auto &f : output.files)
                std::cout << "wrote " << (config.output_dir / f.name).string() << "\n";
        }
        return cli::exit_ok;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"nfocus: near-field focusing with collinear dipole arrays"};
    app.footer(cli::defaults_help() + "\nExit codes: 0 success, 1 I/O failure, 2 invalid configuration, "
                                      "3 numerical tolerance not met.");
    app.require_subcommand(0, 1);

    std::string seed_dir;
    app.add_option("--seed-figures", seed_dir, "Write one config per reproducible figure into DIR and exit");

    Overrides overrides;
    std::vector<std::pair<CLI::App *, cli::Command>> subcommands;
    const std::map<cli::Command, std::string> about = {
        {cli::Command::Phases, "Conjugate-phase excitation table"},
        {cli::Command::Fieldmap, "E-field map CSV + JSON sidecar (line of sight or two-ray ground)"},
        {cli::Command::Profile, "Half-power width/depth metrics and cuts with the closed-form overlay"},
        {cli::Command::Converge, "Focal peak vs element count and the threshold report"},
        {cli::Command::AxialRatio, "Axial ratio vs element count and the minimum N for circular polarisation"},
        {cli::Command::Coupling, "Half-wave dipole mutual impedance vs separation"},
    };
    for (const auto command : cli::all_commands())
    {
        auto *sub = app.add_subcommand(std::string(cli::to_string(command)), about.at(command));
        sub->add_option("-c,--config", overrides.config, "JSON configuration file")->check(CLI::ExistingFile);
        sub->add_option("-o,--out", overrides.out, "Output directory (overrides output_dir)");
        sub->add_flag("-q,--quiet", overrides.quiet, "Do not print the summary");
        if (command == cli::Command::Phases || command == cli::Command::Fieldmap || command == cli::Command::Profile)
        {
            sub->add_option("-s,--strategy", overrides.strategy, "Focus strategy: ex, ez (fieldmap also cp)");
            sub->add_option("-n,--elements", overrides.n_elements, "Number of array elements");
        }
        if (command == cli::Command::Fieldmap)
            sub->add_option("--ground", overrides.ground, "Add a two-ray ground: dielectric or metal");
        subcommands.emplace_back(sub, command);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return cli::exit_config;
    }

    try
    {
        if (!seed_dir.empty())
        {
            const auto files = cli::seed_figure_configs();
            cli::commit(seed_dir, files);
            for (const auto &f : files)
                std::cout << "wrote " << (std::filesystem::path(seed_dir) / f.name).string() << "\n";
            return cli::exit_ok;
        }
        for (const auto &[sub, command] : subcommands)
            if (sub->parsed())
                return run(command, overrides);
        std::cout << app.help();
        return cli::exit_ok;
    }
    catch (const cli::ConfigError &e)
    {
        std::cerr << "nfocus: config error: " << e.what() << "\n";
        return cli::exit_config;
    }
    catch (const DomainError &e)
    {
        std::cerr << "nfocus: invalid input: " << e.what() << "\n";
        return cli::exit_config;
    }
    catch (const ToleranceError &e)
    {
        std::cerr << "nfocus: tolerance not met: " << e.what() << " (error estimate " << e.error_estimate() << ")\n";
        return cli::exit_tolerance;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nfocus: " << e.what() << "\n";
        return cli::exit_failure;
    }
}
