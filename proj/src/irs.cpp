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

#include "irssec/irs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irssec
{
    double wrap_phase(double theta)
    {
        if (!std::isfinite(theta))
            throw std::invalid_argument("phase must be finite");
        double t = std::fmod(theta, two_pi);
        if (t < 0.0)
            t += two_pi;
        // fmod of a tiny negative value can round up to exactly 2*pi
        if (t >= two_pi)
            t = 0.0;
        return t;
    }

    PhaseProfile::PhaseProfile(std::vector<double> amplitudes, std::vector<double> phases)
        : amplitudes_(std::move(amplitudes)), phases_(std::move(phases))
    {
        if (amplitudes_.size() != phases_.size())
            throw std::invalid_argument("phase profile: amplitude and phase vectors differ in length");
        for (const double a : amplitudes_)
            if (!(a >= 0.0 && a <= 1.0))
                throw std::invalid_argument("phase profile: amplitude outside [0, 1]");
        for (double &t : phases_)
            t = wrap_phase(t);
    }

    PhaseProfile PhaseProfile::from_phases(std::vector<double> phases)
    {
        std::vector<double> amps(phases.size(), 1.0);
        return PhaseProfile(std::move(amps), std::move(phases));
    }

    PhaseProfile PhaseProfile::uniform(std::size_t m)
    {
        return PhaseProfile(std::vector<double>(m, 1.0), std::vector<double>(m, 0.0));
    }

    PhaseProfile PhaseProfile::disabled(std::size_t m)
    {
        return PhaseProfile(std::vector<double>(m, 0.0), std::vector<double>(m, 0.0));
    }

    PhaseProfile PhaseProfile::random(std::size_t m, Rng &rng)
    {
        std::uniform_real_distribution<double> u(0.0, two_pi);
        std::vector<double> phases(m);
        for (auto &t : phases)
            t = u(rng);
        return from_phases(std::move(phases));
    }

    void PhaseProfile::set_amplitude(std::size_t m, double phi)
    {
        if (std::isnan(phi))
            throw std::invalid_argument("phase profile: amplitude is NaN");
        amplitudes_.at(m) = std::clamp(phi, 0.0, 1.0);
    }

    cplx PhaseProfile::coefficient(std::size_t m) const
    {
        return std::polar(amplitudes_[m], phases_[m]);
    }

    cplx effective_channel(cplx direct, std::span<const cplx> incident, std::span<const cplx> outgoing,
                           const PhaseProfile &profile)
    {
        if (incident.size() != profile.size() || outgoing.size() != profile.size())
            throw std::invalid_argument("effective_channel: length mismatch (incident " + std::to_string(incident.size()) +
                                        ", outgoing " + std::to_string(outgoing.size()) + ", profile " +
                                        std::to_string(profile.size()) + ")");
        cplx h = direct;
        for (std::size_t m = 0; m < profile.size(); ++m)
            h += profile.coefficient(m) * incident[m] * outgoing[m];
        return h;
    }

    cplx effective_channel(cplx direct, std::span<const cplx> cascade, const PhaseProfile &profile)
    {
        if (cascade.size() != profile.size())
            throw std::invalid_argument("effective_channel: length mismatch (cascade " + std::to_string(cascade.size()) +
                                        ", profile " + std::to_string(profile.size()) + ")");
        cplx h = direct;
        for (std::size_t m = 0; m < profile.size(); ++m)
            h += profile.coefficient(m) * cascade[m];
        return h;
    }

    CVec cascade_coefficients(const ChannelRealization &realization, Receiver receiver)
    {
        const CVec *outgoing = &realization.g_iu;
        if (receiver)
        {
            if (*receiver >= realization.num_eves())
                throw std::out_of_range("cascade_coefficients: eve index " + std::to_string(*receiver) +
                                        " out of range (K = " + std::to_string(realization.num_eves()) + ")");
            outgoing = &realization.g_ie[*receiver];
        }
        if (outgoing->size() != realization.g_ui.size())
            throw std::invalid_argument("cascade_coefficients: inconsistent element count");
        CVec a(realization.g_ui.size());
        for (std::size_t m = 0; m < a.size(); ++m)
            a[m] = realization.g_ui[m] * (*outgoing)[m];
        return a;
    }

    cplx direct_coefficient(const ChannelRealization &realization, Receiver receiver)
    {
        if (!receiver)
            return realization.h_du;
        if (*receiver >= realization.num_eves())
            throw std::out_of_range("direct_coefficient: eve index out of range");
        return realization.h_de[*receiver];
    }

    CascadedChannels CascadedChannels::from(const ChannelRealization &realization)
    {
        CascadedChannels c;
        c.user_direct = realization.h_du;
        c.user_cascade = cascade_coefficients(realization, user_receiver);
        c.eve_direct = realization.h_de;
        c.eve_cascade.reserve(realization.num_eves());
        for (std::size_t k = 0; k < realization.num_eves(); ++k)
            c.eve_cascade.push_back(cascade_coefficients(realization, k));
        return c;
    }
}
