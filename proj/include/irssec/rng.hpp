// irssec - secrecy optimization for IRS-assisted UAV links
// Copyright (C) 2026 The irssec authors
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

#ifndef IRSSEC_RNG_HPP
#define IRSSEC_RNG_HPP

#include <cstdint>
#include <random>

namespace irssec
{
    using Rng = std::mt19937_64;

    // Sub-stream tags. Each trial owns one independent stream per purpose.
    enum class StreamPurpose : std::uint32_t
    {
        channel = 1,
        phase_init = 2,
        instance = 3
    };

    // Counter-based stream derivation: the engine is seeded from the tuple
    // (master_seed, trial_index, purpose) through std::seed_seq. Trials are
    // therefore reproducible regardless of evaluation order.
    inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t trial_index, StreamPurpose purpose)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                          static_cast<std::uint32_t>(master_seed >> 32),
                          static_cast<std::uint32_t>(trial_index),
                          static_cast<std::uint32_t>(trial_index >> 32),
                          static_cast<std::uint32_t>(purpose)};
        return Rng(seq);
    }
}

#endif
