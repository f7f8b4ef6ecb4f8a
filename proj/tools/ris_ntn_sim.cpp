// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
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

// Command-line front end: energy-efficiency sweeps, config validation and one-hop link budgets.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 runtime error. Errors are reported on
// stderr as one line: ris-ntn-sim: error code=<n> kind=<Kind> message="<text>"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "risntn/channel_model.hpp"
#include "risntn/log.hpp"
#include "risntn/sim_config.hpp"
#include "risntn/sweep.hpp"

namespace
{
    constexpr int exit_config_error = 2;
    constexpr int exit_runtime_error = 3;

    int report(int code, const std::string &kind, const std::string &message)
    {
        std::string escaped;
        for (char c : message)
        {
            if (c == '"' || c == '\\')
                escaped += '\\';
            escaped += (c == '\n') ? ' ' : c;
        }
        std::cerr << "ris-ntn-sim: error code=" << code << " kind=" << kind << " message=\"" << escaped << "\"\n";
        return code;
    }

    bool is_config_error(risntn::ErrorKind kind)
    {
        using risntn::ErrorKind;
        return kind == ErrorKind::UnknownKey || kind == ErrorKind::TypeError || kind == ErrorKind::ConstraintError ||
               kind == ErrorKind::InvalidAltitudes || kind == ErrorKind::NonPositiveInput;
    }

    risntn::SimConfig load(const std::string &path)
    {
        try
        {
            return risntn::load_config(path);
        }
        catch (const risntn::Error &e)
        {
            // An unreadable config file is a configuration problem, not a runtime failure
            if (e.kind() == risntn::ErrorKind::IoError)
                throw risntn::ConfigError(risntn::ErrorKind::ConstraintError, "--config", e.what());
            throw;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"RIS-assisted LEO/HAPS downlink simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, arch_list;
    std::optional<std::uint64_t> trials, seed;
    unsigned threads = 0;
    auto *sweep = app.add_subcommand("sweep", "Monte-Carlo energy-efficiency sweep over element counts");
    sweep->add_option("--config", config_path, "Configuration file (key = value lines)")->required();
    sweep->add_option("--out", out_path, "Output CSV path; metadata goes to <out>.meta")->required();
    sweep->add_option("--trials", trials, "Override the number of trials");
    sweep->add_option("--seed", seed, "Override the base seed");
    sweep->add_option("--arch", arch_list, "Override architectures, e.g. sc,fc,gc:4");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency); output is unaffected");

    auto *validate = app.add_subcommand("validate", "Parse and check a configuration file");
    validate->add_option("--config", config_path, "Configuration file")->required();

    double distance_m = 0.0, freq_hz = 0.0;
    auto *budget = app.add_subcommand("budget", "Print the free-space path loss of one hop in dB");
    budget->add_option("--distance-m", distance_m, "Hop length in meters")->required();
    budget->add_option("--freq-hz", freq_hz, "Carrier frequency in Hz")->required();

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
        return report(exit_config_error, "UsageError", e.what());
    }

    try
    {
        if (*budget)
        {
            std::printf("%.4f\n", risntn::fspl_db(distance_m, freq_hz));
            return 0;
        }

        risntn::SimConfig cfg = load(config_path);

        if (*validate)
        {
            (void)cfg.geometry();
            for (const auto &arch : cfg.architectures)
                for (auto m : cfg.elements_sweep)
                    if (!arch.supports(m))
                        risntn::warn(arch.label() + " cannot be paired with M = " + std::to_string(m) +
                                     "; the sweep will skip that cell");
            std::cout << risntn::to_config_text(cfg);
            return 0;
        }

        if (trials)
            cfg.trials = *trials;
        if (seed)
            cfg.seed = *seed;
        if (!arch_list.empty())
        {
            try
            {
                cfg.architectures = risntn::parse_architecture_list(arch_list);
            }
            catch (const risntn::Error &e)
            {
                throw risntn::ConfigError(risntn::ErrorKind::TypeError, "--arch", e.what());
            }
        }
        cfg.check();

        const auto records = risntn::run_sweep(cfg, risntn::SweepOptions{threads});
        risntn::emit_csv(records, out_path, cfg);
        return 0;
    }
    catch (const risntn::Error &e)
    {
        const int code = is_config_error(e.kind()) ? exit_config_error : exit_runtime_error;
        return report(code, risntn::to_string(e.kind()), e.what());
    }
    catch (const std::exception &e)
    {
        return report(exit_runtime_error, "RuntimeError", e.what());
    }
}
