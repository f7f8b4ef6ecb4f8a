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

#include "risntn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "risntn/channel_model.hpp"
#include "risntn/log.hpp"
#include "risntn/phase_optimizer.hpp"

namespace risntn
{
    std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) noexcept
    {
        return derive_key(base_seed, trial);
    }

    namespace
    {
        struct Cell
        {
            Architecture arch;
            std::size_t elements;
        };

        struct Failure
        {
            std::size_t cell;
            std::uint64_t trial;
            std::string message;
        };

        std::vector<Cell> sweep_cells(const SimConfig &cfg)
        {
            std::vector<Cell> cells;
            for (const auto &arch : cfg.architectures)
                for (auto m : cfg.elements_sweep)
                {
                    if (arch.supports(m))
                        cells.push_back({arch, m});
                    else
                        warn("skipping " + arch.label() + " at M = " + std::to_string(m) +
                             ": group count does not divide the element count");
                }
            return cells;
        }

        SweepRecord evaluate(const Cell &cell, const ChannelSet &full, const RfConfig &rf, std::uint64_t trial,
                             std::uint64_t seed)
        {
            // Element m uses the same streams for every M, so the M-element realization is the prefix
            ChannelSet ch{full.h.head(cell.elements), full.g.head(cell.elements), full.h_d};
            const OptimizeResult best = optimize(ch, cell.arch);
            validate(best.phi);
            const LinkReport report = link_report(effective_channel(best.phi, ch), rf);
            return SweepRecord{cell.arch.label(), cell.elements, SweepRecord::Row::Trial,
                               trial, report.h_eff_mag, report.snr_db,
                               report.rate_bps, report.ee_bits_per_joule, seed};
        }
    }

    std::vector<SweepRecord> run_sweep(const SimConfig &cfg, const SweepOptions &options)
    {
        cfg.check();
        const LinkGeometry geom = cfg.geometry();
        const RfConfig rf = cfg.rf();
        const std::vector<Cell> cells = sweep_cells(cfg);
        if (cells.empty())
            return {};

        std::size_t max_elements = 0;
        for (const auto &c : cells)
            max_elements = std::max(max_elements, c.elements);

        const std::uint64_t trials = cfg.trials;
        std::vector<SweepRecord> grid(cells.size() * trials);
        const auto slot = [&](std::size_t cell, std::uint64_t trial) -> SweepRecord &
        { return grid[cell * trials + trial]; };

        unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

        // Each worker keeps its earliest failure in canonical (cell, trial) order
        std::vector<std::optional<Failure>> failures(workers);
        const auto work = [&](unsigned w)
        {
            for (std::uint64_t t = w; t < trials; t += workers)
            {
                const std::uint64_t seed = trial_seed(cfg.seed, t);
                std::size_t c = 0;
                try
                {
                    const ChannelSet full = generate_channels(geom, cfg.fading, max_elements, seed);
                    for (; c < cells.size(); ++c)
                        slot(c, t) = evaluate(cells[c], full, rf, t, seed);
                }
                catch (const std::exception &e)
                {
                    auto &f = failures[w];
                    if (!f || std::pair(c, t) < std::pair(f->cell, f->trial))
                        f = Failure{c, t, e.what()};
                }
            }
        };

        if (workers == 1)
            work(0);
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work, w);
        }

        std::optional<Failure> first;
        for (auto &f : failures)
            if (f && (!first || std::pair(f->cell, f->trial) < std::pair(first->cell, first->trial)))
                first = f;
        if (first)
        {
            const auto &cell = cells[std::min(first->cell, cells.size() - 1)];
            throw Error(ErrorKind::SweepFailure, "arch " + cell.arch.label() + ", M = " +
                                                     std::to_string(cell.elements) + ", trial " +
                                                     std::to_string(first->trial) + ": " + first->message);
        }

        std::vector<SweepRecord> out;
        out.reserve(cells.size() * (trials + 2));
        for (std::size_t c = 0; c < cells.size(); ++c)
        {
            std::vector<double> mag, snr, rate, ee;
            for (std::uint64_t t = 0; t < trials; ++t)
            {
                const SweepRecord &r = slot(c, t);
                out.push_back(r);
                mag.push_back(r.h_eff_mag);
                snr.push_back(r.snr_db);
                rate.push_back(r.rate_bps);
                ee.push_back(r.ee_bits_per_joule);
            }
            const MeanStdErr s_mag = mean_stderr(mag), s_snr = mean_stderr(snr), s_rate = mean_stderr(rate),
                             s_ee = mean_stderr(ee);
            const std::string label = cells[c].arch.label();
            out.push_back({label, cells[c].elements, SweepRecord::Row::Mean, 0, s_mag.mean, s_snr.mean, s_rate.mean,
                           s_ee.mean, cfg.seed});
            out.push_back({label, cells[c].elements, SweepRecord::Row::StdErr, 0, s_mag.std_error, s_snr.std_error,
                           s_rate.std_error, s_ee.std_error, cfg.seed});
        }
        return out;
    }

    MeanStdErr mean_stderr(const std::vector<double> &samples)
    {
        MeanStdErr s;
        if (samples.empty())
            return s;
        double sum = 0.0;
        for (double x : samples)
            sum += x;
        s.mean = sum / double(samples.size());
        if (samples.size() < 2)
            return s;
        double ss = 0.0;
        for (double x : samples)
            ss += (x - s.mean) * (x - s.mean);
        s.std_error = std::sqrt(ss / double(samples.size() - 1) / double(samples.size()));
        return s;
    }

    std::vector<double> trial_ee(const std::vector<SweepRecord> &records, const std::string &arch,
                                 std::size_t elements)
    {
        std::vector<double> ee;
        for (const auto &r : records)
            if (r.row == SweepRecord::Row::Trial && r.arch == arch && r.elements == elements)
                ee.push_back(r.ee_bits_per_joule);
        return ee;
    }

    MeanStdErr paired_ee_difference(const std::vector<SweepRecord> &records, const std::string &arch_a,
                                    const std::string &arch_b, std::size_t elements)
    {
        const auto a = trial_ee(records, arch_a, elements);
        const auto b = trial_ee(records, arch_b, elements);
        if (a.size() != b.size() || a.empty())
            throw Error(ErrorKind::DimensionMismatch, "paired comparison needs matching, non-empty cells");
        std::vector<double> diff(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            diff[i] = a[i] - b[i];
        return mean_stderr(diff);
    }
}
