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

#include <ctime>
#include <fstream>
#include <sstream>

#include "risntn/sweep.hpp"

namespace risntn
{
    std::string format_csv(const std::vector<SweepRecord> &records)
    {
        std::ostringstream os;
        os << "arch,elements,trial,h_eff_mag,snr_db,rate_bps,ee_bits_per_joule,seed\n";
        for (const auto &r : records)
        {
            os << r.arch << ',' << r.elements << ',';
            switch (r.row)
            {
            case SweepRecord::Row::Trial:
                os << r.trial;
                break;
            case SweepRecord::Row::Mean:
                os << "mean";
                break;
            case SweepRecord::Row::StdErr:
                os << "stderr";
                break;
            }
            os << ',' << format_double(r.h_eff_mag) << ',' << format_double(r.snr_db) << ','
               << format_double(r.rate_bps) << ',' << format_double(r.ee_bits_per_joule) << ',' << r.seed << '\n';
        }
        return os.str();
    }

    std::string format_metadata(const SimConfig &cfg, const std::string &timestamp)
    {
        std::ostringstream os;
        os << "# ris-ntn-sim sweep metadata\n"
           << "software_version = " << RISNTN_VERSION << '\n'
           << "noise_interpretation = noise_psd_dbm_hz is a power spectral density in dBm/Hz; "
              "noise power [dBm] = noise_psd_dbm_hz + 10 log10(bandwidth_hz)\n"
           << "channel_model = nadir geometry, free-space path loss per hop, Rician/LOS fade per element\n"
           << "rng = SplitMix64 counter streams keyed by (trial seed, link, element); "
              "trial seed = derive_key(seed, trial); all cells of a trial share one realization\n"
           << "phase_design = closed-form optimum per architecture\n"
           << "ee_definition = rate_bps / (10^((tx_power_dbm - 30)/10) + static_power_w)\n"
           << "\n# resolved configuration\n"
           << to_config_text(cfg);
        if (!timestamp.empty())
            os << "\ngenerated_at = " << timestamp << '\n';
        return os.str();
    }

    std::string metadata_path(const std::string &csv_path)
    {
        return csv_path + ".meta";
    }

    namespace
    {
        void write_file(const std::string &path, const std::string &contents)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
            out << contents;
            out.flush();
            if (!out)
                throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
        }

        std::string utc_timestamp()
        {
            const std::time_t now = std::time(nullptr);
            std::tm utc{};
            gmtime_r(&now, &utc);
            char buf[32];
            std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
            return buf;
        }
    }

    void emit_csv(const std::vector<SweepRecord> &records, const std::string &path, const SimConfig &cfg)
    {
        write_file(path, format_csv(records));
        write_file(metadata_path(path), format_metadata(cfg, utc_timestamp()));
    }
}
