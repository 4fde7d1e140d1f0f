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

#ifndef IRSSEC_IRS_HPP
#define IRSSEC_IRS_HPP

#include "irssec/channel.hpp"

#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace irssec
{
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Maps any finite angle to [0, 2*pi).
    double wrap_phase(double theta);

    // Reflection state of the surface: element m applies amplitudes[m] * exp(j * phases[m]).
    // Amplitudes live in [0, 1] and phases are kept canonical in [0, 2*pi).
    // An empty profile means the link has no IRS.
    class PhaseProfile
    {
    public:
        PhaseProfile() = default;

        // Throws std::invalid_argument on length mismatch, non-finite input or amplitude outside [0, 1].
        PhaseProfile(std::vector<double> amplitudes, std::vector<double> phases);

        // Unit amplitudes with the given phases.
        static PhaseProfile from_phases(std::vector<double> phases);
        // M elements, unit amplitude, zero phase.
        static PhaseProfile uniform(std::size_t m);
        // M elements with amplitude 0: the surface is present but reflects nothing.
        static PhaseProfile disabled(std::size_t m);
        // Unit amplitudes, phases uniform on [0, 2*pi).
        static PhaseProfile random(std::size_t m, Rng &rng);

        std::size_t size() const { return phases_.size(); }
        bool empty() const { return phases_.empty(); }

        std::span<const double> amplitudes() const { return amplitudes_; }
        std::span<const double> phases() const { return phases_; }

        void set_phase(std::size_t m, double theta) { phases_.at(m) = wrap_phase(theta); }
        void set_amplitude(std::size_t m, double phi); // clipped to [0, 1]

        // Diagonal entry phi_m * exp(j * theta_m).
        cplx coefficient(std::size_t m) const;

        friend bool operator==(const PhaseProfile &, const PhaseProfile &) = default;

    private:
        std::vector<double> amplitudes_;
        std::vector<double> phases_;
    };

    // h_eff = direct + sum_m phi_m exp(j theta_m) incident_m outgoing_m.
    // Throws std::invalid_argument on length mismatch.
    cplx effective_channel(cplx direct, std::span<const cplx> incident, std::span<const cplx> outgoing,
                           const PhaseProfile &profile);

    // h_eff = direct + sum_m phi_m exp(j theta_m) a_m for precomputed cascade coefficients a.
    cplx effective_channel(cplx direct, std::span<const cplx> cascade, const PhaseProfile &profile);

    // Receiver selector: std::nullopt is the legitimate user, otherwise an eve index.
    using Receiver = std::optional<std::size_t>;
    inline constexpr Receiver user_receiver = std::nullopt;

    // a_m = g_ui[m] * g_i?[m] for the selected receiver. Throws std::out_of_range for a bad eve index.
    CVec cascade_coefficients(const ChannelRealization &realization, Receiver receiver);

    // Direct coefficient for the selected receiver.
    cplx direct_coefficient(const ChannelRealization &realization, Receiver receiver);

    // Cascade coefficients for the user and every eve, computed once per realization.
    struct CascadedChannels
    {
        cplx user_direct;
        CVec user_cascade;
        CVec eve_direct;
        std::vector<CVec> eve_cascade;

        static CascadedChannels from(const ChannelRealization &realization);

        std::size_t num_elements() const { return user_cascade.size(); }
        std::size_t num_eves() const { return eve_direct.size(); }
    };
}

#endif
