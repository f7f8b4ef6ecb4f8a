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

#ifndef risntn_sweep_H
#define risntn_sweep_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "risntn/sim_config.hpp"

namespace risntn
{
    struct SweepRecord
    {
        enum class Row
        {
            Trial,
            Mean,
            StdErr
        };

        std::string arch; // "sc", "fc", "gc:U"
        std::size_t elements = 0;
        Row row = Row::Trial;
        std::uint64_t trial = 0; // only meaningful for Row::Trial
        double h_eff_mag = 0.0;
        double snr_db = 0.0;
        double rate_bps = 0.0;
        double ee_bits_per_joule = 0.0;
        std::uint64_t seed = 0; // channel seed of the trial; the base seed for aggregate rows

        bool operator==(const SweepRecord &) const = default;
    };

    struct SweepOptions
    {
        unsigned threads = 1; // 0 selects std::thread::hardware_concurrency()
    };

    // Channel seed of one Monte-Carlo trial. Injective in `trial` for a fixed base seed.
    //
    // Every (architecture, M) cell of a trial shares this realization, and element m draws from
    // the same stream for every M, so architectures and surface sizes are compared on common
    // random numbers.
    std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) noexcept;

    // Runs every (architecture, M, trial) cell of the configuration. Cells whose group count does
    // not divide M are skipped with a warning. Output is in canonical order: architectures as
    // listed, then M as listed, then trials 0..N-1 followed by the mean and stderr rows. The
    // result does not depend on options.threads. Failures are rethrown as SweepFailure with the
    // (arch, M, trial) context of the first failing cell in canonical order.
    std::vector<SweepRecord> run_sweep(const SimConfig &cfg, const SweepOptions &options = {});

    // Sample mean and standard error of the mean (0 for a single sample)
    struct MeanStdErr
    {
        double mean = 0.0;
        double std_error = 0.0;
    };

    MeanStdErr mean_stderr(const std::vector<double> &samples);

    // Per-trial energy efficiency of one cell, in trial order
    std::vector<double> trial_ee(const std::vector<SweepRecord> &records, const std::string &arch,
                                 std::size_t elements);

    // Statistics of the per-trial difference EE(arch_a) - EE(arch_b) at M elements. Both cells
    // must hold the same trials.
    MeanStdErr paired_ee_difference(const std::vector<SweepRecord> &records, const std::string &arch_a,
                                    const std::string &arch_b, std::size_t elements);

    // CSV text: header `arch,elements,trial,h_eff_mag,snr_db,rate_bps,ee_bits_per_joule,seed`,
    // aggregate rows use trial = mean / stderr, reals carry 17 significant digits.
    std::string format_csv(const std::vector<SweepRecord> &records);

    // Sidecar contents: software version, noise interpretation, seeding scheme and the resolved
    // configuration. The final line holds the generation timestamp when `timestamp` is non-empty.
    std::string format_metadata(const SimConfig &cfg, const std::string &timestamp);

    // Writes the CSV to `path` and the metadata to `path + ".meta"`. Throws IoError.
    void emit_csv(const std::vector<SweepRecord> &records, const std::string &path, const SimConfig &cfg);

    std::string metadata_path(const std::string &csv_path);
}

#endif
