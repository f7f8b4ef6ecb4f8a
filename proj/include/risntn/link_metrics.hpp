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

#ifndef risntn_link_metrics_H
#define risntn_link_metrics_H

#include "risntn/ris_core.hpp"

namespace risntn
{
    // Noise is specified as a power spectral density in dBm/Hz; total noise power is
    // N0 * bandwidth.
    struct RfConfig
    {
        double tx_power_dbm = 50.0;
        double bandwidth_hz = 20e6;
        double noise_psd_dbm_hz = -170.0;
        double static_power_w = 0.0; // optional additive term in the EE denominator

        // Throws ConstraintError for non-finite values, non-positive bandwidth or negative
        // static power.
        void check() const;
    };

    struct LinkReport
    {
        double h_eff_mag = 0.0;
        double snr_db = 0.0;
        double rate_bps = 0.0;
        double ee_bits_per_joule = 0.0;
    };

    double dbm_to_watts(double dbm);
    double watts_to_dbm(double watts);

    // Noise power over the full bandwidth, in dBm
    double noise_power_dbm(const RfConfig &rf);

    // P_tx |h_eff|^2 / (N0 B), linear
    double snr_linear(cx h_eff, const RfConfig &rf);

    // 10 log10 of snr_linear; -inf for a zero channel
    double snr_db(cx h_eff, const RfConfig &rf);

    // Shannon rate B log2(1 + SNR) in bit/s
    double rate_bps(cx h_eff, const RfConfig &rf);

    // rate / (P_tx + static power) in bit/J. Throws NonPositivePower if the denominator is not
    // strictly positive.
    double energy_efficiency(double rate_bps, double tx_power_dbm, double static_power_w = 0.0);

    LinkReport link_report(cx h_eff, const RfConfig &rf);
}

#endif
