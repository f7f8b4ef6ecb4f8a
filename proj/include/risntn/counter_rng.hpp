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

#ifndef risntn_counter_rng_H
#define risntn_counter_rng_H

#include <cstdint>

namespace risntn
{
    // Counter-based random streams built on the SplitMix64 output function.
    //
    // A stream is identified by a 64-bit key; draw k of the stream is mix64(key + (k + 1) * golden).
    // Draws depend only on (key, k), so any subset of streams can be evaluated in any order or on
    // any thread with identical results.

    inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

    // SplitMix64 finalizer; a bijection on 64-bit words
    constexpr std::uint64_t mix64(std::uint64_t x) noexcept
    {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    // Child key for sub-stream `index` of `parent`. Injective in `index` for a fixed parent.
    constexpr std::uint64_t derive_key(std::uint64_t parent, std::uint64_t index) noexcept
    {
        return mix64(mix64(parent) + (index + 1) * golden_gamma);
    }

    class CounterStream
    {
    public:
        constexpr explicit CounterStream(std::uint64_t key) noexcept : key_(key) {}

        constexpr std::uint64_t key() const noexcept { return key_; }

        constexpr std::uint64_t bits(std::uint64_t counter) const noexcept
        {
            return mix64(key_ + (counter + 1) * golden_gamma);
        }

        // Uniform in the open interval (0, 1), 53-bit resolution
        constexpr double uniform(std::uint64_t counter) const noexcept
        {
            return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
        }

    private:
        std::uint64_t key_;
    };
}

#endif
