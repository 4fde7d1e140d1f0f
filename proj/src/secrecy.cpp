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

#include "irssec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irssec
{
    double rate(cplx h_eff, double power, double noise_variance)
    {
        if (!(power >= 0.0))
            throw std::invalid_argument("rate: power must be >= 0");
        if (!(noise_variance > 0.0))
            throw std::invalid_argument("rate: noise variance must be > 0");
        return std::log2(1.0 + power * std::norm(h_eff) / noise_variance);
    }

    std::size_t argmax_lowest(std::span<const double> values)
    {
        if (values.empty())
            throw std::invalid_argument("argmax over an empty set");
        std::size_t best = 0;
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] > values[best])
                best = i;
        return best;
    }

    SecrecyOutcome make_outcome(double power, PhaseProfile profile, double rate_user, std::vector<double> rate_eves)
    {
        SecrecyOutcome out;
        out.power = power;
        out.profile = std::move(profile);
        out.rate_user = rate_user;
        out.rate_eves = std::move(rate_eves);
        out.active_eve = argmax_lowest(out.rate_eves);
        out.secrecy_capacity = std::max(0.0, rate_user - out.rate_eves[out.active_eve]);
        return out;
    }

    SecrecyOutcome secrecy_capacity(const ChannelRealization &realization, const PhaseProfile &profile,
                                    double power, const FadingParams &params)
    {
        if (profile.size() != realization.num_elements())
            throw std::invalid_argument("secrecy_capacity: profile has " + std::to_string(profile.size()) +
                                        " elements, realization has " + std::to_string(realization.num_elements()));
        if (realization.num_eves() == 0)
            throw std::invalid_argument("secrecy_capacity: realization has no eves");

        const double ru = rate(effective_channel(realization.h_du, realization.g_ui, realization.g_iu, profile), power,
                               params.noise_variance);
        std::vector<double> re(realization.num_eves());
        for (std::size_t k = 0; k < re.size(); ++k)
            re[k] = rate(effective_channel(realization.h_de[k], realization.g_ui, realization.g_ie[k], profile), power,
                         params.noise_variance);
        return make_outcome(power, profile, ru, std::move(re));
    }

    SecrecyOutcome secrecy_capacity(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                                    double noise_variance)
    {
        if (channels.num_eves() == 0)
            throw std::invalid_argument("secrecy_capacity: realization has no eves");
        const double ru = rate(effective_channel(channels.user_direct, channels.user_cascade, profile), power,
                               noise_variance);
        std::vector<double> re(channels.num_eves());
        for (std::size_t k = 0; k < re.size(); ++k)
            re[k] = rate(effective_channel(channels.eve_direct[k], channels.eve_cascade[k], profile), power,
                         noise_variance);
        return make_outcome(power, profile, ru, std::move(re));
    }
}
