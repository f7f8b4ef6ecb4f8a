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

#include "risntn/link_metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace risntn
{
    void RfConfig::check() const
    {
        if (!std::isfinite(tx_power_dbm) || !std::isfinite(bandwidth_hz) || !std::isfinite(noise_psd_dbm_hz) ||
            !std::isfinite(static_power_w))
            throw Error(ErrorKind::ConstraintError, "RF parameters must be finite");
        if (!(bandwidth_hz > 0.0))
            throw Error(ErrorKind::ConstraintError, "bandwidth must be positive");
        if (static_power_w < 0.0)
            throw Error(ErrorKind::ConstraintError, "static power must be non-negative");
    }

    double dbm_to_watts(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    double watts_to_dbm(double watts)
    {
        return 10.0 * std::log10(watts) + 30.0;
    }

    double noise_power_dbm(const RfConfig &rf)
    {
        return rf.noise_psd_dbm_hz + 10.0 * std::log10(rf.bandwidth_hz);
    }

    double snr_linear(cx h_eff, const RfConfig &rf)
    {
        const double noise_w = dbm_to_watts(rf.noise_psd_dbm_hz) * rf.bandwidth_hz;
        return dbm_to_watts(rf.tx_power_dbm) * std::norm(h_eff) / noise_w;
    }

    double snr_db(cx h_eff, const RfConfig &rf)
    {
        const double snr = snr_linear(h_eff, rf);
        if (snr == 0.0)
            return -std::numeric_limits<double>::infinity();
        return 10.0 * std::log10(snr);
    }

    double rate_bps(cx h_eff, const RfConfig &rf)
    {
        // log1p keeps the tiny-SNR regime accurate
        return rf.bandwidth_hz * std::log1p(snr_linear(h_eff, rf)) / std::numbers::ln2;
    }

    double energy_efficiency(double rate, double tx_power_dbm, double static_power_w)
    {
        const double denominator = dbm_to_watts(tx_power_dbm) + static_power_w;
        if (!(denominator > 0.0) || !std::isfinite(denominator))
            throw Error(ErrorKind::NonPositivePower, "energy efficiency needs a positive power budget");
        return rate / denominator;
    }

    LinkReport link_report(cx h_eff, const RfConfig &rf)
    {
        LinkReport r;
        r.h_eff_mag = std::abs(h_eff);
        r.snr_db = snr_db(h_eff, rf);
        r.rate_bps = rate_bps(h_eff, rf);
        r.ee_bits_per_joule = energy_efficiency(r.rate_bps, rf.tx_power_dbm, rf.static_power_w);
        return r;
    }
}
