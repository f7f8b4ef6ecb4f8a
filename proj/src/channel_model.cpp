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

#include "risntn/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "risntn/log.hpp"

namespace risntn
{
    LinkGeometry build_geometry(double leo_altitude_m, double haps_altitude_m, double carrier_hz, AntennaGains gains)
    {
        if (!std::isfinite(leo_altitude_m) || !std::isfinite(haps_altitude_m) || !(haps_altitude_m > 0.0) ||
            !(leo_altitude_m > haps_altitude_m))
        {
            std::ostringstream os;
            os << "altitudes must satisfy leo > haps > 0 (leo " << leo_altitude_m << " m, haps "
               << haps_altitude_m << " m)";
            throw Error(ErrorKind::InvalidAltitudes, os.str());
        }
        if (!std::isfinite(carrier_hz) || !(carrier_hz > 0.0))
            throw Error(ErrorKind::NonPositiveInput, "carrier frequency must be positive");
        if (carrier_hz < ka_band_low_hz || carrier_hz > ka_band_high_hz)
        {
            std::ostringstream os;
            os << "carrier " << carrier_hz << " Hz lies outside the Ka-band downlink (17.7-19.7 GHz)";
            warn(os.str());
        }

        LinkGeometry g;
        g.leo_altitude_m = leo_altitude_m;
        g.haps_altitude_m = haps_altitude_m;
        g.carrier_hz = carrier_hz;
        g.d_direct_m = leo_altitude_m;
        g.d_leo_ris_m = leo_altitude_m - haps_altitude_m;
        g.d_ris_ut_m = haps_altitude_m;
        g.gains = gains;
        return g;
    }

    static void check_positive(double distance_m, double frequency_hz)
    {
        if (!(distance_m > 0.0) || !(frequency_hz > 0.0) || !std::isfinite(distance_m) || !std::isfinite(frequency_hz))
            throw Error(ErrorKind::NonPositiveInput, "path loss needs positive, finite distance and frequency");
    }

    double fspl_amplitude(double distance_m, double frequency_hz)
    {
        check_positive(distance_m, frequency_hz);
        return speed_of_light / (4.0 * std::numbers::pi * distance_m * frequency_hz);
    }

    double fspl_db(double distance_m, double frequency_hz)
    {
        check_positive(distance_m, frequency_hz);
        return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / speed_of_light);
    }

    std::uint64_t fade_stream_key(std::uint64_t seed, Link link, std::size_t element) noexcept
    {
        return derive_key(derive_key(seed, static_cast<std::uint64_t>(link)), element);
    }

    cx draw_fade(const FadingSpec &fading, const CounterStream &stream)
    {
        double los_phase = 0.0;
        if (fading.los_phase == FadingSpec::LosPhase::IidUniform)
            los_phase = 2.0 * std::numbers::pi * stream.uniform(2);
        const cx los = std::polar(1.0, los_phase);
        if (fading.model == FadingSpec::Model::PureLos)
            return los;

        // Box-Muller in polar form: sqrt(-ln u1) e^{j 2 pi u2} is CN(0, 1)
        const cx z = std::polar(std::sqrt(-std::log(stream.uniform(0))), 2.0 * std::numbers::pi * stream.uniform(1));

        const double k = std::pow(10.0, fading.k_factor_db / 10.0);
        const double los_weight = std::sqrt(1.0 / (1.0 + 1.0 / k));
        const double diffuse_weight = std::sqrt(1.0 / (k + 1.0));
        return los_weight * los + diffuse_weight * z;
    }

    ChannelSet generate_channels(const LinkGeometry &geom, const FadingSpec &fading, std::size_t elements,
                                 std::uint64_t seed)
    {
        if (elements == 0)
            throw Error(ErrorKind::DimensionMismatch, "RIS needs at least one element");
        if (!std::isfinite(fading.k_factor_db))
            throw Error(ErrorKind::ConstraintError, "Rician K-factor must be finite");

        const double lambda = geom.wavelength_m();
        const auto db_to_amp = [](double db)
        { return std::pow(10.0, db / 20.0); };
        const double tx = db_to_amp(geom.gains.tx_dbi);
        const double ris = db_to_amp(geom.gains.ris_element_dbi);
        const double rx = db_to_amp(geom.gains.rx_dbi);

        // Deterministic part of each hop: amplitude and propagation phase e^{-j 2 pi d / lambda}
        const auto hop = [&](double d, double gain)
        {
            const double phase = -2.0 * std::numbers::pi * std::fmod(d / lambda, 1.0);
            return std::polar(fspl_amplitude(d, geom.carrier_hz) * gain, phase);
        };
        const cx hop_leo_ris = hop(geom.d_leo_ris_m, tx * ris);
        const cx hop_ris_ut = hop(geom.d_ris_ut_m, ris * rx);
        const cx hop_direct = hop(geom.d_direct_m, tx * rx);

        ChannelSet ch;
        ch.h.set_size(elements);
        ch.g.set_size(elements);
        for (std::size_t m = 0; m < elements; ++m)
        {
            ch.h(m) = hop_leo_ris * draw_fade(fading, CounterStream(fade_stream_key(seed, Link::LeoToRis, m)));
            ch.g(m) = hop_ris_ut * draw_fade(fading, CounterStream(fade_stream_key(seed, Link::RisToUt, m)));
        }
        ch.h_d = hop_direct * draw_fade(fading, CounterStream(fade_stream_key(seed, Link::Direct, 0)));
        return ch;
    }
}
