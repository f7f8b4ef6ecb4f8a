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

#ifndef risntn_channel_model_H
#define risntn_channel_model_H

#include <cstddef>
#include <cstdint>

#include "risntn/counter_rng.hpp"
#include "risntn/ris_core.hpp"

namespace risntn
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    // Ka-band downlink edges; carriers outside raise a warning only
    inline constexpr double ka_band_low_hz = 17.7e9;
    inline constexpr double ka_band_high_hz = 19.7e9;

    // Antenna and per-element gains in dBi, folded into the amplitude of every hop they touch
    struct AntennaGains
    {
        double tx_dbi = 0.0;
        double ris_element_dbi = 0.0;
        double rx_dbi = 0.0;

        bool operator==(const AntennaGains &) const = default;
    };

    // Nadir geometry: satellite, HAPS and UT are stacked vertically
    struct LinkGeometry
    {
        double leo_altitude_m = 0.0;
        double haps_altitude_m = 0.0;
        double carrier_hz = 0.0;
        double d_direct_m = 0.0;
        double d_leo_ris_m = 0.0;
        double d_ris_ut_m = 0.0;
        AntennaGains gains;

        double wavelength_m() const noexcept { return speed_of_light / carrier_hz; }
    };

    // Throws InvalidAltitudes unless leo > haps > 0 (both finite), NonPositiveInput for a
    // non-positive carrier. Logs a warning for carriers outside the Ka-band downlink.
    LinkGeometry build_geometry(double leo_altitude_m, double haps_altitude_m, double carrier_hz,
                                AntennaGains gains = {});

    struct FadingSpec
    {
        enum class Model
        {
            PureLos,
            Rician
        };

        // Phase of the deterministic component: zero on every element (CommonLos) or drawn
        // uniformly on [0, 2 pi) per element (IidUniform)
        enum class LosPhase
        {
            CommonLos,
            IidUniform
        };

        Model model = Model::Rician;
        double k_factor_db = 10.0;
        LosPhase los_phase = LosPhase::IidUniform;

        static FadingSpec pure_los(LosPhase phase = LosPhase::CommonLos) { return {Model::PureLos, 0.0, phase}; }
        static FadingSpec rician(double k_factor_db, LosPhase phase = LosPhase::IidUniform)
        {
            return {Model::Rician, k_factor_db, phase};
        }

        bool operator==(const FadingSpec &) const = default;
    };

    // Free-space amplitude gain lambda / (4 pi d). Throws NonPositiveInput.
    double fspl_amplitude(double distance_m, double frequency_hz);

    // Free-space path loss 20 log10(4 pi d f / c) in dB. Throws NonPositiveInput.
    double fspl_db(double distance_m, double frequency_hz);

    // Link identifiers used to key the random streams
    enum class Link : std::uint64_t
    {
        LeoToRis = 0,
        RisToUt = 1,
        Direct = 2
    };

    // Key of the stream feeding one (link, element) fade; independent of the element count
    std::uint64_t fade_stream_key(std::uint64_t seed, Link link, std::size_t element) noexcept;

    // Unit-power small-scale fade
    //   sqrt(k/(k+1)) e^{j theta_los} + sqrt(1/(k+1)) z,  z ~ CN(0, 1)
    // Draws 0 and 1 of the stream produce z, draw 2 produces theta_los (IidUniform only).
    cx draw_fade(const FadingSpec &fading, const CounterStream &stream);

    // One channel realization for an M-element surface. A pure function of its arguments;
    // element m uses the same streams for every M, so growing the surface keeps earlier draws.
    ChannelSet generate_channels(const LinkGeometry &geom, const FadingSpec &fading, std::size_t elements,
                                 std::uint64_t seed);
}

#endif
