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

#ifndef risntn_sim_config_H
#define risntn_sim_config_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "risntn/channel_model.hpp"
#include "risntn/link_metrics.hpp"
#include "risntn/ris_core.hpp"

namespace risntn
{
    inline constexpr std::size_t max_sweep_elements = std::size_t(1) << 16;
    inline constexpr std::uint64_t max_trials = std::uint64_t(1) << 31;

    // Full description of one energy-efficiency sweep. Defaults reproduce the Ka-band LEO
    // downlink through a 15 km HAPS-mounted RIS.
    struct SimConfig
    {
        double carrier_hz = 18.7e9;
        double tx_power_dbm = 50.0;
        double bandwidth_hz = 20e6;
        double noise_psd_dbm_hz = -170.0;
        double static_power_w = 0.0;
        double leo_altitude_m = 600e3;
        double haps_altitude_m = 15e3;
        std::vector<std::size_t> elements_sweep{8, 16, 24, 32, 40, 48, 56, 64};
        std::vector<Architecture> architectures{Architecture::single_connected(), Architecture::fully_connected()};
        FadingSpec fading = FadingSpec::rician(10.0, FadingSpec::LosPhase::IidUniform);
        std::uint64_t trials = 1000;
        std::uint64_t seed = 42;
        AntennaGains gains;

        RfConfig rf() const { return {tx_power_dbm, bandwidth_hz, noise_psd_dbm_hz, static_power_w}; }

        // Nadir geometry for this configuration (may log a Ka-band warning)
        LinkGeometry geometry() const;

        // Throws ConstraintError(key, reason) for the first violated constraint. Group-connected
        // entries that do not divide a swept M are not errors; the sweep skips those cells.
        void check() const;

        bool operator==(const SimConfig &) const = default;
    };

    // Parses a plain-text document of `key = value` lines. `#` starts a comment; blank lines are
    // ignored; missing keys keep their defaults. Throws UnknownKey, TypeError or ConstraintError.
    //
    // Keys: carrier_hz, tx_power_dbm, bandwidth_hz, noise_psd_dbm_hz, static_power_w,
    // leo_altitude_m, haps_altitude_m, elements_sweep (comma list), architectures (comma list of
    // sc, fc, gc:U), fading (rician | pure_los), k_factor_db, los_phase (iid_uniform |
    // common_los), trials, seed, tx_gain_dbi, ris_element_gain_dbi, rx_gain_dbi.
    SimConfig parse_config(std::string_view text);

    // Reads and parses a file. Throws IoError if it cannot be read.
    SimConfig load_config(const std::string &path);

    // Fully resolved configuration in parse_config syntax; parse_config(to_config_text(c)) == c.
    std::string to_config_text(const SimConfig &cfg);

    // Comma-separated list helpers shared with the CLI flag parser
    std::vector<Architecture> parse_architecture_list(std::string_view text);
    std::string format_architecture_list(const std::vector<Architecture> &archs);

    // Round-trip exact decimal form (17 significant digits)
    std::string format_double(double value);
}

#endif
