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

#include "irssec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irssec
{
    namespace
    {
        // Smallest step [rad] the line search tries before declaring the point stationary.
        constexpr double min_step = 1e-12;

        std::vector<cplx> reflection(const PhaseProfile &profile)
        {
            std::vector<cplx> r(profile.size());
            for (std::size_t m = 0; m < r.size(); ++m)
                r[m] = profile.coefficient(m);
            return r;
        }

        cplx combine(cplx direct, const CVec &cascade, const std::vector<cplx> &refl)
        {
            cplx h = direct;
            for (std::size_t m = 0; m < refl.size(); ++m)
                h += refl[m] * cascade[m];
            return h;
        }

        // Per-node effective channels and rates at one profile.
        struct NodeState
        {
            cplx h_user;
            std::vector<cplx> h_eves;
            double rate_user = 0.0;
            std::vector<double> rate_eves;
        };

        NodeState evaluate(const CascadedChannels &ch, const std::vector<cplx> &refl, double snr_scale)
        {
            NodeState s;
            s.h_user = combine(ch.user_direct, ch.user_cascade, refl);
            s.rate_user = std::log2(1.0 + snr_scale * std::norm(s.h_user));
            s.h_eves.resize(ch.num_eves());
            s.rate_eves.resize(ch.num_eves());
            for (std::size_t k = 0; k < ch.num_eves(); ++k)
            {
                s.h_eves[k] = combine(ch.eve_direct[k], ch.eve_cascade[k], refl);
                s.rate_eves[k] = std::log2(1.0 + snr_scale * std::norm(s.h_eves[k]));
            }
            return s;
        }

        // Weights of each eve rate in the aggregate's gradient (one-hot for the hard max).
        std::vector<double> eve_weights(const std::vector<double> &rates, double temperature)
        {
            std::vector<double> w(rates.size(), 0.0);
            if (temperature <= 0.0)
            {
                w[argmax_lowest(rates)] = 1.0;
                return w;
            }
            const double top = *std::max_element(rates.begin(), rates.end());
            double sum = 0.0;
            for (std::size_t k = 0; k < rates.size(); ++k)
            {
                w[k] = std::exp((rates[k] - top) / temperature);
                sum += w[k];
            }
            for (auto &x : w)
                x /= sum;
            return w;
        }

        double eve_aggregate(const std::vector<double> &rates, double temperature)
        {
            const double top = *std::max_element(rates.begin(), rates.end());
            if (temperature <= 0.0)
                return top;
            double sum = 0.0;
            for (const double r : rates)
                sum += std::exp((r - top) / temperature);
            return top + temperature * std::log(sum);
        }

        double objective(const NodeState &s, double temperature)
        {
            return s.rate_user - eve_aggregate(s.rate_eves, temperature);
        }

        // d rate / d |h|^2 for rate = log2(1 + c |h|^2).
        double rate_slope(cplx h, double snr_scale)
        {
            return snr_scale / (std::numbers::ln2 * (1.0 + snr_scale * std::norm(h)));
        }

        void check_power_noise(double power, double noise_variance)
        {
            if (!(power >= 0.0))
                throw std::invalid_argument("power must be >= 0");
            if (!(noise_variance > 0.0))
                throw std::invalid_argument("noise variance must be > 0");
        }

        void check_sizes(const CascadedChannels &ch, const PhaseProfile &profile)
        {
            if (ch.num_eves() == 0)
                throw std::invalid_argument("realization has no eves");
            if (profile.size() != ch.num_elements())
                throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                            " elements, realization has " + std::to_string(ch.num_elements()));
        }

        // Gradient of the objective w.r.t. phases (which = 0) or amplitudes (which = 1).
        std::vector<double> objective_gradient(const CascadedChannels &ch, const PhaseProfile &profile,
                                               const std::vector<cplx> &refl, const NodeState &s,
                                               double snr_scale, double temperature, int which)
        {
            const std::size_t m_count = profile.size();
            const auto w = eve_weights(s.rate_eves, temperature);

            // d|h|^2/d theta_m = 2 Im(conj(phi_m e^{j theta_m} a_m) h)
            // d|h|^2/d phi_m   = 2 Re(conj(e^{j theta_m} a_m) h)
            auto contribution = [&](cplx h, const CVec &cascade, double weight, std::vector<double> &g) {
                const double slope = weight * rate_slope(h, snr_scale);
                if (slope == 0.0)
                    return;
                for (std::size_t m = 0; m < m_count; ++m)
                {
                    if (which == 0)
                    {
                        const cplx term = std::conj(refl[m] * cascade[m]) * h;
                        g[m] += slope * 2.0 * term.imag();
                    }
                    else
                    {
                        const cplx unit = std::polar(1.0, profile.phases()[m]);
                        const cplx term = std::conj(unit * cascade[m]) * h;
                        g[m] += slope * 2.0 * term.real();
                    }
                }
            };

            std::vector<double> g(m_count, 0.0);
            contribution(s.h_user, ch.user_cascade, 1.0, g);
            for (std::size_t k = 0; k < ch.num_eves(); ++k)
                contribution(s.h_eves[k], ch.eve_cascade[k], -w[k], g);
            return g;
        }

        bool improved_enough(double before, double after, double tol)
        {
            const double scale = std::max(std::abs(before), std::abs(after));
            return (after - before) > tol * scale;
        }
    }

    void OptimizerConfig::validate() const
    {
        if (max_outer_iters < 1)
            throw std::invalid_argument("optimizer.max_outer_iters: must be >= 1");
        if (max_inner_iters < 1)
            throw std::invalid_argument("optimizer.max_inner_iters: must be >= 1");
        if (restarts < 1)
            throw std::invalid_argument("optimizer.restarts: must be >= 1");
        if (!(step_size > 0.0) || !std::isfinite(step_size))
            throw std::invalid_argument("optimizer.step_size: must be > 0");
        if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
            throw std::invalid_argument("optimizer.backtrack_factor: must be in (0, 1)");
        if (!(tol > 0.0) || !std::isfinite(tol))
            throw std::invalid_argument("optimizer.tol: must be > 0");
        if (!(power_max > 0.0) || !std::isfinite(power_max))
            throw std::invalid_argument("power_max: must be > 0");
        if (!(smoothing_temperature >= 0.0) || !std::isfinite(smoothing_temperature))
            throw std::invalid_argument("optimizer.smoothing_temperature: must be >= 0");
    }

    double optimal_power(double user_gain, double best_eve_gain, double power_max)
    {
        return user_gain > best_eve_gain ? power_max : 0.0;
    }

    double phase_objective(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                           double noise_variance, double temperature)
    {
        check_power_noise(power, noise_variance);
        check_sizes(channels, profile);
        const auto s = evaluate(channels, reflection(profile), power / noise_variance);
        return objective(s, temperature);
    }

    std::vector<double> phase_gradient(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                                       double noise_variance, double temperature)
    {
        if (profile.empty() || channels.num_elements() == 0)
            throw std::invalid_argument("nothing to optimize");
        check_power_noise(power, noise_variance);
        check_sizes(channels, profile);
        const double snr_scale = power / noise_variance;
        const auto refl = reflection(profile);
        const auto s = evaluate(channels, refl, snr_scale);
        return objective_gradient(channels, profile, refl, s, snr_scale, temperature, 0);
    }

    std::vector<double> phase_gradient(const ChannelRealization &realization, const PhaseProfile &profile,
                                       double power, const FadingParams &params, double temperature)
    {
        return phase_gradient(CascadedChannels::from(realization), profile, power, params.noise_variance,
                              temperature);
    }

    std::vector<double> amplitude_gradient(const CascadedChannels &channels, const PhaseProfile &profile,
                                           double power, double noise_variance, double temperature)
    {
        if (profile.empty() || channels.num_elements() == 0)
            throw std::invalid_argument("nothing to optimize");
        check_power_noise(power, noise_variance);
        check_sizes(channels, profile);
        const double snr_scale = power / noise_variance;
        const auto refl = reflection(profile);
        const auto s = evaluate(channels, refl, snr_scale);
        return objective_gradient(channels, profile, refl, s, snr_scale, temperature, 1);
    }

    namespace
    {
        std::pair<PhaseProfile, OptimizationTrace> ascend(const CascadedChannels &ch, const PhaseProfile &init,
                                                          double power, double noise_variance,
                                                          const OptimizerConfig &cfg, std::size_t restart_index)
        {
            const double snr_scale = power / noise_variance;
            const double temperature = cfg.smoothing_temperature;
            const std::size_t m_count = init.size();

            PhaseProfile current = init;
            auto refl = reflection(current);
            auto state = evaluate(ch, refl, snr_scale);
            double f = objective(state, temperature);

            OptimizationTrace trace;
            trace.objective_per_iter.push_back(f);
            trace.restart_of_iter.push_back(restart_index);
            trace.restarts_tried = 1;

            double step = cfg.step_size;
            for (std::size_t it = 0; it < cfg.max_inner_iters; ++it)
            {
                auto g_theta = objective_gradient(ch, current, refl, state, snr_scale, temperature, 0);
                std::vector<double> g_phi;
                if (cfg.optimize_amplitudes)
                    g_phi = objective_gradient(ch, current, refl, state, snr_scale, temperature, 1);

                // Direction scaled by its max-norm; step is in radians.
                double g_max = 0.0;
                for (const double v : g_theta)
                    g_max = std::max(g_max, std::abs(v));
                for (const double v : g_phi)
                    g_max = std::max(g_max, std::abs(v));
                if (!(g_max > 0.0) || !std::isfinite(g_max))
                {
                    trace.converged = true;
                    break;
                }

                bool accepted = false;
                while (step >= min_step)
                {
                    PhaseProfile candidate = current;
                    for (std::size_t m = 0; m < m_count; ++m)
                        candidate.set_phase(m, current.phases()[m] + step * g_theta[m] / g_max);
                    if (cfg.optimize_amplitudes)
                        for (std::size_t m = 0; m < m_count; ++m)
                            candidate.set_amplitude(m, current.amplitudes()[m] + step * g_phi[m] / g_max);

                    auto cand_refl = reflection(candidate);
                    auto cand_state = evaluate(ch, cand_refl, snr_scale);
                    const double f_new = objective(cand_state, temperature);
                    if (f_new > f)
                    {
                        const bool significant = improved_enough(f, f_new, cfg.tol);
                        current = std::move(candidate);
                        refl = std::move(cand_refl);
                        state = std::move(cand_state);
                        f = f_new;
                        trace.objective_per_iter.push_back(f);
                        trace.restart_of_iter.push_back(restart_index);
                        accepted = true;
                        if (!significant && step <= std::sqrt(cfg.tol))
                            trace.converged = true;
                        step = std::min(step / cfg.backtrack_factor, cfg.step_size);
                        break;
                    }
                    step *= cfg.backtrack_factor;
                }
                if (!accepted)
                    trace.converged = true;
                if (trace.converged)
                    break;
            }
            return {std::move(current), std::move(trace)};
        }

        SecrecyOutcome outcome_at(const CascadedChannels &ch, const PhaseProfile &profile, double noise_variance,
                                  double power_max)
        {
            // Decide the power from the effective gains at this profile, then evaluate there.
            const auto refl = reflection(profile);
            const auto s = evaluate(ch, refl, 1.0 / noise_variance);
            double best_eve_gain = 0.0;
            for (const auto &h : s.h_eves)
                best_eve_gain = std::max(best_eve_gain, std::norm(h) / noise_variance);
            const double p = optimal_power(std::norm(s.h_user) / noise_variance, best_eve_gain, power_max);
            return secrecy_capacity(ch, profile, p, noise_variance);
        }
    }

    SecrecyOutcome evaluate_with_optimal_power(const ChannelRealization &realization, const PhaseProfile &profile,
                                               const FadingParams &params, double power_max)
    {
        const auto ch = CascadedChannels::from(realization);
        check_sizes(ch, profile);
        const auto out = outcome_at(ch, profile, params.noise_variance, power_max);
        return secrecy_capacity(realization, out.profile, out.power, params);
    }

    std::pair<PhaseProfile, OptimizationTrace> optimize_phases(const ChannelRealization &realization,
                                                               const PhaseProfile &profile_init, double power,
                                                               const FadingParams &params,
                                                               const OptimizerConfig &cfg)
    {
        if (!(power > 0.0))
            throw std::invalid_argument("optimize_phases: power must be > 0");
        cfg.validate();
        const auto ch = CascadedChannels::from(realization);
        check_sizes(ch, profile_init);
        if (profile_init.empty())
            throw std::invalid_argument("nothing to optimize");
        auto [profile, trace] = ascend(ch, profile_init, power, params.noise_variance, cfg, 0);
        trace.final = secrecy_capacity(ch, profile, power, params.noise_variance);
        return {std::move(profile), std::move(trace)};
    }

    std::pair<SecrecyOutcome, OptimizationTrace> alternate_optimize(const ChannelRealization &realization,
                                                                    const FadingParams &params,
                                                                    const OptimizerConfig &cfg, Rng &rng,
                                                                    std::span<const PhaseProfile> warm_starts)
    {
        cfg.validate();
        params.validate();
        realization.validate();
        const auto ch = CascadedChannels::from(realization);
        const std::size_t m_count = ch.num_elements();
        const double noise = params.noise_variance;

        OptimizationTrace trace;
        if (m_count == 0)
        {
            trace.final = outcome_at(ch, PhaseProfile{}, noise, cfg.power_max);
            trace.objective_per_iter.push_back(trace.final.secrecy_capacity);
            trace.restart_of_iter.push_back(0);
            trace.converged = true;
            return {trace.final, std::move(trace)};
        }

        std::vector<PhaseProfile> inits;
        inits.reserve(warm_starts.size() + cfg.restarts);
        for (const auto &w : warm_starts)
        {
            if (w.size() != m_count)
                throw std::invalid_argument("alternate_optimize: warm start has wrong element count");
            inits.push_back(w);
        }
        for (std::size_t r = 0; r < cfg.restarts; ++r)
            inits.push_back(PhaseProfile::random(m_count, rng));

        // Reflection switched off: the no-IRS fallback candidate.
        SecrecyOutcome best = outcome_at(ch, PhaseProfile::disabled(m_count), noise, cfg.power_max);
        bool all_converged = true;

        for (std::size_t r = 0; r < inits.size(); ++r)
        {
            PhaseProfile profile = inits[r];
            double power = cfg.power_max;
            double previous = -std::numeric_limits<double>::infinity();
            bool converged = false;
            SecrecyOutcome outcome;
            for (std::size_t outer = 0; outer < cfg.max_outer_iters; ++outer)
            {
                // Dead link: steer the phases at full power.
                const double phase_power = power > 0.0 ? power : cfg.power_max;
                auto [next, inner] = ascend(ch, profile, phase_power, noise, cfg, r);
                profile = std::move(next);
                trace.objective_per_iter.insert(trace.objective_per_iter.end(), inner.objective_per_iter.begin(),
                                                inner.objective_per_iter.end());
                trace.restart_of_iter.insert(trace.restart_of_iter.end(), inner.restart_of_iter.begin(),
                                             inner.restart_of_iter.end());

                outcome = outcome_at(ch, profile, noise, cfg.power_max);
                power = outcome.power;
                const double value = outcome.secrecy_capacity;
                if (outer > 0 && !improved_enough(previous, value, cfg.tol))
                {
                    converged = true;
                    break;
                }
                previous = value;
            }
            all_converged = all_converged && converged;
            if (outcome.secrecy_capacity > best.secrecy_capacity)
                best = std::move(outcome);
        }

        trace.restarts_tried = inits.size();
        trace.converged = all_converged;
        // Reported value is secrecy_capacity() on the raw realization.
        best = secrecy_capacity(realization, best.profile, best.power, params);
        trace.final = best;
        return {std::move(best), std::move(trace)};
    }

    SecrecyOutcome oracle_grid_search(const ChannelRealization &realization, const FadingParams &params,
                                      double power_max, std::size_t levels)
    {
        const std::size_t m_count = realization.num_elements();
        if (m_count > 3)
            throw std::invalid_argument("oracle restricted to desk scale");
        if (levels < 2)
            throw std::invalid_argument("oracle_grid_search: levels must be >= 2");
        if (!(power_max > 0.0))
            throw std::invalid_argument("oracle_grid_search: power_max must be > 0");
        params.validate();
        const auto ch = CascadedChannels::from(realization);
        const double noise = params.noise_variance;

        if (m_count == 0)
            return outcome_at(ch, PhaseProfile{}, noise, power_max);

        std::size_t total = 1;
        for (std::size_t m = 0; m < m_count; ++m)
            total *= levels;

        std::vector<double> phases(m_count, 0.0);
        PhaseProfile best_profile;
        double best_value = -std::numeric_limits<double>::infinity();
        for (std::size_t idx = 0; idx < total; ++idx)
        {
            std::size_t rest = idx;
            for (std::size_t m = 0; m < m_count; ++m)
            {
                phases[m] = two_pi * static_cast<double>(rest % levels) / static_cast<double>(levels);
                rest /= levels;
            }
            auto profile = PhaseProfile::from_phases(phases);
            const auto s = evaluate(ch, reflection(profile), power_max / noise);
            const double value = objective(s, 0.0);
            if (value > best_value)
            {
                best_value = value;
                best_profile = std::move(profile);
            }
        }
        auto out = outcome_at(ch, best_profile, noise, power_max);
        return secrecy_capacity(realization, out.profile, out.power, params);
    }
}
