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

// Test-only reference computations. These deliberately avoid the library's
// evaluation path (no PhaseProfile::coefficient, no CascadedChannels, no rate()).

#ifndef IRSSEC_TESTS_ORACLES_HPP
#define IRSSEC_TESTS_ORACLES_HPP

#include "irssec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;

    // Direct + sum over elements of phi * exp(j theta) * incident * outgoing, written out in real arithmetic.
    inline cplx effective(cplx direct, const std::vector<cplx> &incident, const std::vector<cplx> &outgoing,
                          const std::vector<double> &amps, const std::vector<double> &phases)
    {
        double re = direct.real(), im = direct.imag();
        for (std::size_t m = 0; m < phases.size(); ++m)
        {
            // (a + jb)(c + jd) for incident * outgoing
            const double pr = incident[m].real() * outgoing[m].real() - incident[m].imag() * outgoing[m].imag();
            const double pi = incident[m].real() * outgoing[m].imag() + incident[m].imag() * outgoing[m].real();
            const double c = amps[m] * std::cos(phases[m]);
            const double s = amps[m] * std::sin(phases[m]);
            re += c * pr - s * pi;
            im += c * pi + s * pr;
        }
        return {re, im};
    }

    inline double shannon(cplx h, double power, double noise)
    {
        const double snr = power * (h.real() * h.real() + h.imag() * h.imag()) / noise;
        return std::log(1.0 + snr) / std::log(2.0);
    }

    // rate_user - max_k rate_k (temperature 0) or minus the log-sum-exp aggregate.
    inline double objective(const irssec::ChannelRealization &r, const std::vector<double> &amps,
                            const std::vector<double> &phases, double power, double noise, double temperature)
    {
        const double ru = shannon(effective(r.h_du, r.g_ui, r.g_iu, amps, phases), power, noise);
        std::vector<double> re;
        for (std::size_t k = 0; k < r.h_de.size(); ++k)
            re.push_back(shannon(effective(r.h_de[k], r.g_ui, r.g_ie[k], amps, phases), power, noise));
        const double top = *std::max_element(re.begin(), re.end());
        if (temperature <= 0.0)
            return ru - top;
        double sum = 0.0;
        for (const double v : re)
            sum += std::exp((v - top) / temperature);
        return ru - (top + temperature * std::log(sum));
    }

    // Central finite differences of objective() in each phase.
    inline std::vector<double> fd_phase_gradient(const irssec::ChannelRealization &r, const std::vector<double> &amps,
                                                 const std::vector<double> &phases, double power, double noise,
                                                 double temperature, double h = 1e-6)
    {
        std::vector<double> g(phases.size());
        for (std::size_t m = 0; m < phases.size(); ++m)
        {
            auto plus = phases, minus = phases;
            plus[m] += h;
            minus[m] -= h;
            g[m] = (objective(r, amps, plus, power, noise, temperature) -
                    objective(r, amps, minus, power, noise, temperature)) /
                   (2.0 * h);
        }
        return g;
    }

    // Secrecy capacity with bang-bang power, from scratch.
    inline double capacity(const irssec::ChannelRealization &r, const std::vector<double> &amps,
                           const std::vector<double> &phases, double power_max, double noise)
    {
        return std::max(0.0, objective(r, amps, phases, power_max, noise, 0.0));
    }
}

#endif
