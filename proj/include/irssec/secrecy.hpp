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

#ifndef IRSSEC_SECRECY_HPP
#define IRSSEC_SECRECY_HPP

#include "irssec/channel.hpp"
#include "irssec/irs.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace irssec
{
    struct SecrecyOutcome
    {
        double power = 0.0;                // W
        PhaseProfile profile;
        double rate_user = 0.0;            // bits/s/Hz
        std::vector<double> rate_eves;     // bits/s/Hz, one per eve
        double secrecy_capacity = 0.0;     // max(0, rate_user - max rate_eves)
        std::size_t active_eve = 0;        // argmax of rate_eves, lowest index on ties

        double max_eve_rate() const { return rate_eves.empty() ? 0.0 : rate_eves[active_eve]; }
    };

    // Shannon rate log2(1 + power * |h|^2 / noise_variance).
    // Throws std::invalid_argument for negative power or non-positive noise variance.
    double rate(cplx h_eff, double power, double noise_variance);

    // Index of the largest entry, lowest index on ties. Throws on empty input.
    std::size_t argmax_lowest(std::span<const double> values);

    // Secrecy capacity against the strongest single (non-colluding) eve.
    SecrecyOutcome secrecy_capacity(const ChannelRealization &realization, const PhaseProfile &profile,
                                    double power, const FadingParams &params);

    // Same evaluation over precomputed cascade coefficients.
    SecrecyOutcome secrecy_capacity(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                                    double noise_variance);

    // Combines per-node rates: clamps the gap at zero and records the active eve.
    SecrecyOutcome make_outcome(double power, PhaseProfile profile, double rate_user, std::vector<double> rate_eves);
}

#endif
