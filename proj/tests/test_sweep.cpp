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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "risntn/log.hpp"
#include "risntn/sweep.hpp"

using namespace risntn;
using Catch::Matchers::WithinRel;

namespace
{
    SimConfig small_config()
    {
        SimConfig cfg;
        cfg.architectures = {Architecture::single_connected(), Architecture::fully_connected()};
        cfg.elements_sweep = {8, 32};
        cfg.trials = 50;
        return cfg;
    }

    std::string slurp(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    std::string without_timestamp(const std::string &text)
    {
        std::istringstream in(text);
        std::string line, out;
        while (std::getline(in, line))
            if (!line.starts_with("generated_at"))
                out += line + '\n';
        return out;
    }

    std::filesystem::path temp_path(const std::string &name)
    {
        return std::filesystem::temp_directory_path() / ("risntn_test_" + name);
    }
}

TEST_CASE("trial_seed - injective over trials")
{
    std::set<std::uint64_t> seeds;
    for (std::uint64_t t = 0; t < 100000; ++t)
        seeds.insert(trial_seed(42, t));
    CHECK(seeds.size() == 100000);
    CHECK(trial_seed(42, 0) != trial_seed(43, 0));
}

TEST_CASE("run_sweep - record counts and canonical order")
{
    SimConfig cfg = small_config();
    cfg.trials = 1000;
    const auto records = run_sweep(cfg);
    CHECK(records.size() == 2 * 2 * 1000 + 2 * 2 * 2);

    std::size_t trial_rows = 0, aggregate_rows = 0;
    for (const auto &r : records)
        (r.row == SweepRecord::Row::Trial ? trial_rows : aggregate_rows)++;
    CHECK(trial_rows == 4000);
    CHECK(aggregate_rows == 8); // mean + stderr per (arch, M)

    CHECK(records.front().arch == "sc");
    CHECK(records.front().elements == 8);
    CHECK(records.front().trial == 0);
    CHECK(records[1000].row == SweepRecord::Row::Mean);
    CHECK(records[1001].row == SweepRecord::Row::StdErr);
    CHECK(records[1002].elements == 32);
    CHECK(records.back().arch == "fc");
    CHECK(records.back().row == SweepRecord::Row::StdErr);
}

TEST_CASE("run_sweep - aggregates are the mean of their trials")
{
    const auto records = run_sweep(small_config());
    for (const auto &r : records)
    {
        if (r.row != SweepRecord::Row::Mean)
            continue;
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto &t : records)
            if (t.row == SweepRecord::Row::Trial && t.arch == r.arch && t.elements == r.elements)
            {
                sum += t.ee_bits_per_joule;
                ++n;
            }
        CHECK(n == 50);
        CHECK_THAT(r.ee_bits_per_joule, WithinRel(sum / double(n), 1e-12));
    }
}

TEST_CASE("run_sweep - FC dominates SC per trial, EE grows with M")
{
    const auto records = run_sweep(small_config());
    const auto sc8 = trial_ee(records, "sc", 8), fc8 = trial_ee(records, "fc", 8);
    const auto sc32 = trial_ee(records, "sc", 32), fc32 = trial_ee(records, "fc", 32);
    for (std::size_t t = 0; t < sc8.size(); ++t)
    {
        CHECK(fc8[t] >= sc8[t]);
        CHECK(fc32[t] >= sc32[t]);
        CHECK(sc32[t] > sc8[t]);
        CHECK(fc32[t] > fc8[t]);
    }
    CHECK(paired_ee_difference(records, "fc", "sc", 32).mean > 0.0);
}

TEST_CASE("run_sweep - identical output for any thread count")
{
    SimConfig cfg = small_config();
    cfg.architectures.push_back(Architecture::group_connected(4));
    const auto one = run_sweep(cfg, {1});
    const auto three = run_sweep(cfg, {3});
    const auto eight = run_sweep(cfg, {8});
    CHECK(one == three);
    CHECK(one == eight);
    CHECK(format_csv(one) == format_csv(eight));
}

TEST_CASE("run_sweep - skips group counts that do not divide M")
{
    std::vector<std::string> warnings;
    set_warning_sink([&](const std::string &m)
                     { warnings.push_back(m); });
    SimConfig cfg = small_config();
    cfg.elements_sweep = {6, 8};
    cfg.architectures = {Architecture::group_connected(4)};
    cfg.trials = 3;
    const auto records = run_sweep(cfg);
    set_warning_sink(nullptr);

    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("gc:4") != std::string::npos);
    CHECK(records.size() == 3 + 2);
    for (const auto &r : records)
        CHECK(r.elements == 8);
}

TEST_CASE("format_csv - header and row layout")
{
    const std::string header = "arch,elements,trial,h_eff_mag,snr_db,rate_bps,ee_bits_per_joule,seed\n";
    CHECK(format_csv({}) == header);

    SweepRecord r{"gc:2", 4, SweepRecord::Row::Trial, 7, 0.1, -3.5, 1e6, 1e4, 99};
    CHECK(format_csv({r}) == header + "gc:2,4,7,0.10000000000000001,-3.5,1000000,10000,99\n");

    r.row = SweepRecord::Row::Mean;
    CHECK(format_csv({r}).ends_with("gc:2,4,mean,0.10000000000000001,-3.5,1000000,10000,99\n"));
    r.row = SweepRecord::Row::StdErr;
    r.snr_db = -INFINITY;
    CHECK(format_csv({r}).ends_with("gc:2,4,stderr,0.10000000000000001,-inf,1000000,10000,99\n"));
}

TEST_CASE("format_csv - 17 significant digits round-trip exactly")
{
    const auto records = run_sweep(small_config());
    const std::string csv = format_csv(records);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::size_t i = 0;
    while (std::getline(in, line))
    {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ','))
            fields.push_back(f);
        REQUIRE(fields.size() == 8);
        CHECK(std::stod(fields[3]) == records[i].h_eff_mag);
        CHECK(std::stod(fields[6]) == records[i].ee_bits_per_joule);
        ++i;
    }
    CHECK(i == records.size());
}

TEST_CASE("emit_csv - files, metadata and byte identity across runs")
{
    const auto a = temp_path("a.csv"), b = temp_path("b.csv");
    const SimConfig cfg = small_config();
    emit_csv(run_sweep(cfg, {1}), a.string(), cfg);
    emit_csv(run_sweep(cfg, {4}), b.string(), cfg);

    CHECK(slurp(a.string()) == slurp(b.string()));
    const std::string meta_a = slurp(metadata_path(a.string()));
    const std::string meta_b = slurp(metadata_path(b.string()));
    CHECK(without_timestamp(meta_a) == without_timestamp(meta_b));
    CHECK(meta_a.find("generated_at = ") != std::string::npos);
    CHECK(meta_a.find("dBm/Hz") != std::string::npos);
    CHECK(meta_a.find("software_version = ") != std::string::npos);
    // the resolved configuration is echoed in parseable form
    const auto cfg_start = meta_a.find("carrier_hz");
    const auto cfg_end = meta_a.find("\ngenerated_at");
    CHECK(parse_config(meta_a.substr(cfg_start, cfg_end - cfg_start)) == cfg);

    for (const auto &p : {a, b})
    {
        std::filesystem::remove(p);
        std::filesystem::remove(metadata_path(p.string()));
    }
}

TEST_CASE("emit_csv - empty and single-record files")
{
    const auto p = temp_path("small.csv");
    emit_csv({}, p.string(), SimConfig{});
    CHECK(slurp(p.string()) == "arch,elements,trial,h_eff_mag,snr_db,rate_bps,ee_bits_per_joule,seed\n");

    emit_csv({SweepRecord{"sc", 1, SweepRecord::Row::Trial, 0, 1.0, 0.0, 1.0, 0.01, 5}}, p.string(), SimConfig{});
    const std::string text = slurp(p.string());
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    std::filesystem::remove(p);
    std::filesystem::remove(metadata_path(p.string()));
}

TEST_CASE("emit_csv - unwritable destination")
{
    try
    {
        emit_csv({}, "/nonexistent-dir/out.csv", SimConfig{});
        FAIL("expected IoError");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::IoError);
    }
}

TEST_CASE("run_sweep - failures carry cell context")
{
    SimConfig cfg = small_config();
    cfg.trials = 2;
    cfg.tx_power_dbm = -INFINITY;
    try
    {
        run_sweep(cfg);
        FAIL("expected an error");
    }
    catch (const Error &e)
    {
        // -inf dBm is rejected up front as a configuration problem
        CHECK(e.kind() == ErrorKind::ConstraintError);
    }

    cfg = small_config();
    cfg.trials = 2;
    cfg.static_power_w = 0.0;
    cfg.tx_power_dbm = -4000.0; // underflows to 0 W: EE has no positive denominator
    try
    {
        run_sweep(cfg);
        FAIL("expected SweepFailure");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::SweepFailure);
        const std::string what = e.what();
        CHECK(what.find("arch sc, M = 8, trial 0") != std::string::npos);
    }
}
